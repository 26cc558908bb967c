#![allow(dead_code)]

use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::net::TcpListener;
use std::path::{Path, PathBuf};
use std::thread;

use chrono::{DateTime, TimeZone, Utc};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn rule_fixtures() -> PathBuf {
    fixtures().join("rules")
}

pub fn fixed_clock() -> DateTime<Utc> {
    Utc.with_ymd_and_hms(2024, 1, 2, 3, 4, 5).unwrap()
}

/// Every fixture document: the per-rule corpus plus the clean document.
pub fn fixture_documents() -> Vec<(String, Vec<u8>)> {
    let mut docs: Vec<(String, Vec<u8>)> = fs::read_dir(rule_fixtures())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "yaml"))
        .map(|p| {
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read(&p).unwrap(),
            )
        })
        .collect();
    docs.push((
        "clean.yaml".into(),
        fs::read(fixtures().join("clean.yaml")).unwrap(),
    ));
    docs.sort();
    docs
}

/// An OpenAPI 3 YAML document with `n` structurally identical paths, each
/// with a secured GET and a POST.
pub fn synthetic_document(n: usize) -> String {
    let mut out = String::from(
        "openapi: 3.0.3\ninfo:\n  title: Synthetic\n  version: '1'\ncomponents:\n  securitySchemes:\n    key:\n      type: apiKey\n      in: header\n      name: X-Key\npaths:\n",
    );
    for i in 0..n {
        let _ = write!(
            out,
            "  /tenants{i}/orderitems/{{item_id}}:
    get:
      summary: Retrieve the order item with the given identifier
      security:
        - key: []
      responses:
        '200':
          description: The item
          content:
            application/json:
              schema:
                type: object
    post:
      summary: Delete the order item
      requestBody:
        content:
          application/json: {{}}
      responses:
        '201':
          description: Created
"
        );
    }
    out
}

/// Lays out a 100-document corpus under `dir`: 94 valid, 5 malformed and one
/// whose size exceeds `oversize_limit`.
pub fn robustness_corpus(dir: &Path, oversize_limit: usize) {
    let valid = fixture_documents();
    for i in 0..94 {
        let (name, bytes) = &valid[i % valid.len()];
        let sub = dir.join(format!("group{}", i % 4));
        fs::create_dir_all(&sub).unwrap();
        fs::write(sub.join(format!("{i:03}-{name}")), bytes).unwrap();
    }
    let malformed: [(&str, &[u8]); 5] = [
        (
            "broken-indent.yaml",
            b"openapi: 3.0.0\ninfo:\n  title: x\n version: 1\npaths: {\n",
        ),
        ("truncated.json", b"{\"openapi\": \"3.0.0\", \"paths\": {\"/a\": "),
        ("list.yaml", b"- openapi\n- 3.0.0\n"),
        (
            "no-version.json",
            b"{\"info\": {\"title\": \"x\"}, \"paths\": {}}",
        ),
        ("binary.yaml", &[0xff, 0xfe, 0x00, 0x9c, 0x7b, 0x22]),
    ];
    let bad = dir.join("malformed");
    fs::create_dir_all(&bad).unwrap();
    for (name, bytes) in malformed {
        fs::write(bad.join(name), bytes).unwrap();
    }
    let mut big = synthetic_document(1);
    while big.len() <= oversize_limit {
        big.push_str("# padding padding padding padding padding padding padding padding\n");
    }
    fs::write(dir.join("oversize.yaml"), big).unwrap();
}

/// Serves exactly one HTTP response on a local port and returns its URL.
pub fn serve_once(status: u16, body: Vec<u8>) -> String {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap();
    thread::spawn(move || {
        let (stream, _) = listener.accept().unwrap();
        let mut reader = BufReader::new(stream.try_clone().unwrap());
        let mut line = String::new();
        while reader.read_line(&mut line).unwrap_or(0) > 0 {
            if line == "\r\n" {
                break;
            }
            line.clear();
        }
        let mut stream = stream;
        let head = format!(
            "HTTP/1.1 {status} X\r\nContent-Type: application/yaml\r\nContent-Length: {}\r\nConnection: close\r\n\r\n",
            body.len()
        );
        let _ = stream.write_all(head.as_bytes());
        let _ = stream.write_all(&body);
    });
    format!("http://{addr}/openapi.yaml")
}
