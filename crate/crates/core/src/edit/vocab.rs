//! Identifier material for renaming: reserved-word filtering and the default
//! out-of-method vocabulary.

use crate::ast::lex;

/// Words usable as replacement identifiers when renaming beyond the names a
/// method already contains. Sixty-four common programming words; callers can
/// supply their own list instead.
pub const DEFAULT_VOCABULARY: &[&str] = &[
    "buffer", "cache", "client", "color", "config", "context", "count", "data", "date", "debug",
    "error", "failed", "fetch", "file", "flag", "graph", "handler", "height", "image", "index",
    "info", "input", "item", "job", "key", "length", "line", "list", "load", "log", "main", "map",
    "message", "model", "name", "node", "output", "page", "queue", "read", "result", "save",
    "server", "size", "stack", "state", "status", "stream", "succeeded", "sum", "task", "temp",
    "test", "text", "time", "token", "tree", "user", "util", "value", "view", "warn", "width",
    "word",
];

pub fn default_vocabulary() -> Vec<String> {
    DEFAULT_VOCABULARY.iter().map(|s| s.to_string()).collect()
}

/// Reserved words can never name anything.
pub fn is_reserved_word(word: &str) -> bool {
    // the lexer owns the keyword table
    matches!(
        lex(word).as_deref(),
        Ok([t]) if matches!(t.kind, crate::ast::TokenKind::Keyword(_))
    ) || word.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vocabulary_has_sixty_four_clean_words() {
        assert_eq!(DEFAULT_VOCABULARY.len(), 64);
        for w in DEFAULT_VOCABULARY {
            assert!(!is_reserved_word(w), "{w} is reserved");
        }
        let mut sorted = default_vocabulary();
        sorted.dedup();
        assert_eq!(sorted.len(), 64);
    }

    #[test]
    fn keywords_are_reserved() {
        for w in ["while", "for", "int", "true", "class", "new"] {
            assert!(is_reserved_word(w));
        }
        assert!(!is_reserved_word("image"));
    }
}
