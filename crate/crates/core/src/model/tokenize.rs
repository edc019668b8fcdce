use std::ops::Deref;

use serde::{Deserialize, Serialize};

/// Splits text into tokens. Metrics, length classes and contamination checks
/// all go through one implementation so their counts agree.
pub trait Tokenizer: Send + Sync {
    fn tokenize(&self, text: &str) -> Vec<String>;
}

/// Word/punctuation splitter: runs of alphanumerics (and `_`) form words,
/// every other non-space character is its own token, and `{}` stays whole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordPunct {
    pub lowercase: bool,
}

impl Default for WordPunct {
    fn default() -> Self {
        WordPunct { lowercase: true }
    }
}

impl Tokenizer for WordPunct {
    fn tokenize(&self, text: &str) -> Vec<String> {
        let mut tokens = Vec::new();
        let mut word = String::new();
        let mut chars = text.chars().peekable();
        let flush = |word: &mut String, tokens: &mut Vec<String>| {
            if !word.is_empty() {
                tokens.push(std::mem::take(word));
            }
        };
        while let Some(c) = chars.next() {
            if c.is_alphanumeric() || c == '_' {
                if self.lowercase {
                    word.extend(c.to_lowercase());
                } else {
                    word.push(c);
                }
                continue;
            }
            flush(&mut word, &mut tokens);
            if c.is_whitespace() {
                continue;
            }
            if c == '{' && chars.peek() == Some(&'}') {
                chars.next();
                tokens.push("{}".to_string());
            } else {
                tokens.push(c.to_string());
            }
        }
        flush(&mut word, &mut tokens);
        tokens
    }
}

/// Token sequence produced by a [`Tokenizer`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TokenSeq(pub Vec<String>);

impl TokenSeq {
    /// Tokenizes with the default [`WordPunct`] splitter.
    pub fn from_text(text: &str) -> Self {
        TokenSeq(WordPunct::default().tokenize(text))
    }

    pub fn with(tokenizer: &dyn Tokenizer, text: &str) -> Self {
        TokenSeq(tokenizer.tokenize(text))
    }
}

impl Deref for TokenSeq {
    type Target = [String];

    fn deref(&self) -> &[String] {
        &self.0
    }
}

impl<S: Into<String>> FromIterator<S> for TokenSeq {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        TokenSeq(iter.into_iter().map(Into::into).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_words_and_punctuation() {
        let t = WordPunct::default().tokenize("The server run on the ports, {}");
        assert_eq!(t, vec!["the", "server", "run", "on", "the", "ports", ",", "{}"]);
    }

    #[test]
    fn keeps_identifiers_and_unpaired_braces() {
        let t = WordPunct::default().tokenize("map{k_1}=v2 {x}");
        assert_eq!(t, vec!["map", "{", "k_1", "}", "=", "v2", "{", "x", "}"]);
    }

    #[test]
    fn case_can_be_preserved() {
        let t = WordPunct { lowercase: false }.tokenize("Hello World");
        assert_eq!(t, vec!["Hello", "World"]);
    }

    #[test]
    fn empty_and_blank_text() {
        assert!(WordPunct::default().tokenize("").is_empty());
        assert!(WordPunct::default().tokenize(" \n\t").is_empty());
    }
}
