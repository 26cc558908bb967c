use std::io::Read;
use std::time::Duration;

use thiserror::Error;

use crate::openapi::ParseError;

pub const DEFAULT_FETCH_TIMEOUT: Duration = Duration::from_secs(30);

#[derive(Debug, Error)]
pub enum FetchError {
    #[error("unsupported URL scheme in {0} (expected http or https)")]
    Scheme(String),
    #[error("cannot fetch {url}: {message}")]
    Network { url: String, message: String },
    #[error("cannot fetch {url}: server answered {status}")]
    Status { url: String, status: u16 },
    #[error(transparent)]
    TooLarge(ParseError),
}

pub fn is_remote(input: &str) -> bool {
    let lower = input.to_ascii_lowercase();
    lower.starts_with("http://") || lower.starts_with("https://")
}

/// Downloads `url`, refusing bodies larger than `max_bytes`.
pub fn fetch_remote(url: &str, max_bytes: usize, timeout: Duration) -> Result<Vec<u8>, FetchError> {
    if !is_remote(url) {
        return Err(FetchError::Scheme(url.to_string()));
    }
    let network = |e: reqwest::Error| FetchError::Network {
        url: url.to_string(),
        message: e.to_string(),
    };
    let client = reqwest::blocking::Client::builder()
        .timeout(timeout)
        .build()
        .map_err(network)?;
    let response = client.get(url).send().map_err(network)?;
    let status = response.status();
    if !status.is_success() {
        return Err(FetchError::Status {
            url: url.to_string(),
            status: status.as_u16(),
        });
    }
    let too_large = |size: usize| {
        FetchError::TooLarge(ParseError::DocumentTooLarge {
            size,
            limit: max_bytes,
        })
    };
    if let Some(len) = response.content_length() {
        if len > max_bytes as u64 {
            return Err(too_large(len as usize));
        }
    }
    let mut body = Vec::new();
    response
        .take(max_bytes as u64 + 1)
        .read_to_end(&mut body)
        .map_err(|e| FetchError::Network {
            url: url.to_string(),
            message: e.to_string(),
        })?;
    if body.len() > max_bytes {
        return Err(too_large(body.len()));
    }
    Ok(body)
}
