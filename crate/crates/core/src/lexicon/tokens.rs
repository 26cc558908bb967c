/// True when the whole segment is a `{name}` template parameter.
pub fn is_template(segment: &str) -> bool {
    segment.len() >= 2 && segment.starts_with('{') && segment.ends_with('}')
}

/// Removes every `{...}` span, leaving the literal text of a segment.
pub fn strip_templates(segment: &str) -> String {
    let mut out = String::with_capacity(segment.len());
    let mut depth = 0usize;
    for c in segment.chars() {
        match c {
            '{' => depth += 1,
            '}' if depth > 0 => depth -= 1,
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out
}

/// Splits a URI segment into lowercase words.
///
/// Separators are any non-alphanumeric characters; camelCase and
/// letter/digit boundaries also split. Digit-only pieces are dropped.
///
/// `"getUserProfiles"` → `["get", "user", "profiles"]`,
/// `"HTTPServer_v2"` → `["http", "server", "v"]`.
pub fn split_words(segment: &str) -> Vec<String> {
    let mut words = Vec::new();
    for piece in strip_templates(segment).split(|c: char| !c.is_alphanumeric()) {
        let chars: Vec<char> = piece.chars().collect();
        let mut start = 0;
        for i in 1..chars.len() {
            let (prev, cur) = (chars[i - 1], chars[i]);
            let next_lower = chars.get(i + 1).is_some_and(|c| c.is_lowercase());
            let boundary = (prev.is_lowercase() && cur.is_uppercase())
                || (prev.is_uppercase() && cur.is_uppercase() && next_lower)
                || (prev.is_alphabetic() != cur.is_alphabetic());
            if boundary {
                push_word(&mut words, &chars[start..i]);
                start = i;
            }
        }
        push_word(&mut words, &chars[start..]);
    }
    words
}

fn push_word(words: &mut Vec<String>, chars: &[char]) {
    if chars.iter().any(|c| c.is_alphabetic()) {
        words.push(chars.iter().flat_map(|c| c.to_lowercase()).collect());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn camel_case_and_separators() {
        assert_eq!(split_words("getUsers"), ["get", "users"]);
        assert_eq!(split_words("user-profiles"), ["user", "profiles"]);
        assert_eq!(split_words("my_users"), ["my", "users"]);
        assert_eq!(split_words("HTTPServer_v2"), ["http", "server", "v"]);
        assert_eq!(split_words("Microsoft.Sql"), ["microsoft", "sql"]);
        assert_eq!(split_words("2024"), Vec::<String>::new());
    }

    #[test]
    fn templates_are_ignored() {
        assert!(is_template("{id}"));
        assert!(!is_template("{id}.json"));
        assert_eq!(strip_templates("{id}.json"), ".json");
        assert_eq!(split_words("{userId}"), Vec::<String>::new());
    }
}
