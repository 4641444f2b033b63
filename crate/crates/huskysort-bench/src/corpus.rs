//! Word-corpus ingestion.
//!
//! The main format is Leipzig sentence files: tab-separated lines of
//! `id<TAB>sentence`. A line regex peels off the id field and captures the
//! run of letters, whitespace and punctuation that follows; a splitter then
//! breaks the capture on whitespace, ASCII punctuation or U+FF0C (the
//! fullwidth comma common in Chinese text). Words shorter than the
//! configured minimum are dropped; everything else is kept in order of
//! appearance, duplicates included.

use std::path::PathBuf;
use std::sync::OnceLock;

use regex::Regex;

/// How to interpret a corpus file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorpusFormat {
    /// `id<TAB>sentence` lines, words extracted by regex.
    #[default]
    LeipzigSentences,
    /// Whitespace-separated words, no line structure.
    PlainWords,
}

/// Where and how to read a corpus.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub path: PathBuf,
    pub format: CorpusFormat,
    /// Words with fewer characters than this are dropped.
    pub min_word_length: usize,
    /// Stop after this many words, if set.
    pub limit: Option<usize>,
}

impl CorpusSpec {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self {
            path: path.into(),
            format: CorpusFormat::LeipzigSentences,
            min_word_length: 2,
            limit: None,
        }
    }
}

/// Matches a Leipzig line and captures the sentence text in group 1.
///
/// The character classes spell out ASCII whitespace and ASCII punctuation
/// (`[:punct:]`) rather than `\s`/Unicode punctuation, so that e.g. the
/// ideographic space U+3000 stays *inside* words here and is handled by the
/// splitter stage only if listed there — the two stages must agree.
fn leipzig_line_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"[~\t]*\t(([ \t\n\x0B\x0C\r[:punct:]\x{FF0C}]*\p{L}+)*)").unwrap()
    })
}

/// Splits captured sentence text into words.
fn word_splitter_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"[ \t\n\x0B\x0C\r[:punct:]\x{FF0C}]").unwrap())
}

/// Extracts the words of one Leipzig-format line; empty if the line has no
/// id/tab structure or no letters.
pub fn split_leipzig_line(line: &str, min_word_length: usize) -> Vec<String> {
    let Some(caps) = leipzig_line_regex().captures(line) else {
        return Vec::new();
    };
    let sentence = caps.get(1).map_or("", |m| m.as_str());
    word_splitter_regex()
        .split(sentence)
        .filter(|w| w.chars().count() >= min_word_length)
        .map(str::to_owned)
        .collect()
}

/// Loads the corpus described by `spec`. A missing file is not an error:
/// it logs a warning and yields an empty corpus, leaving the decision of
/// whether that is fatal to the caller (generators reject empty corpora).
pub fn load_corpus_words(spec: &CorpusSpec) -> Vec<String> {
    let text = match std::fs::read_to_string(&spec.path) {
        Ok(text) => text,
        Err(err) => {
            log::warn!("cannot read corpus {}: {err}", spec.path.display());
            return Vec::new();
        }
    };
    let mut words = Vec::new();
    match spec.format {
        CorpusFormat::LeipzigSentences => {
            for line in text.lines() {
                words.extend(split_leipzig_line(line, spec.min_word_length));
                if spec.limit.is_some_and(|limit| words.len() >= limit) {
                    break;
                }
            }
        }
        CorpusFormat::PlainWords => {
            words.extend(
                text.split_whitespace()
                    .filter(|w| w.chars().count() >= spec.min_word_length)
                    .map(str::to_owned),
            );
        }
    }
    if let Some(limit) = spec.limit {
        words.truncate(limit);
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn splits_a_simple_line() {
        assert_eq!(
            split_leipzig_line("12\tthe cat, sat", 2),
            ["the", "cat", "sat"]
        );
    }

    #[test]
    fn drops_words_below_the_minimum_length() {
        assert!(split_leipzig_line("12\ta b", 2).is_empty());
        assert_eq!(split_leipzig_line("12\ta b", 1), ["a", "b"]);
    }

    #[test]
    fn splits_on_fullwidth_comma_and_counts_cjk_chars() {
        // One CJK character is one character for the length rule.
        let words = split_leipzig_line("7\t你好\u{FF0C}世界 and more", 2);
        assert_eq!(words, ["你好", "世界", "and", "more"]);
    }

    #[test]
    fn line_without_tab_yields_nothing() {
        assert!(split_leipzig_line("no tab here", 2).is_empty());
    }

    #[test]
    fn punctuation_class_is_ascii_punct() {
        // Guard the regex syntax: `[:punct:]` inside a class must be the
        // POSIX class, not a literal set of those seven characters.
        let re = word_splitter_regex();
        for punct in ['!', ',', '.', ';', '~', '(', '\u{FF0C}'] {
            assert!(re.is_match(&punct.to_string()), "{punct:?} should split");
        }
        for not_punct in ['a', '7', '你', '\u{3000}'] {
            assert!(
                !re.is_match(&not_punct.to_string()),
                "{not_punct:?} should not split"
            );
        }
    }

    #[test]
    fn missing_file_is_an_empty_corpus() {
        let spec = CorpusSpec::new("/nonexistent/definitely/not/here.txt");
        assert!(load_corpus_words(&spec).is_empty());
    }

    #[test]
    fn loads_and_limits_a_real_file() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "1\tthe quick brown fox").unwrap();
        writeln!(file, "2\tjumps over the lazy dog").unwrap();
        file.flush().unwrap();
        let mut spec = CorpusSpec::new(file.path());
        let all = load_corpus_words(&spec);
        assert_eq!(
            all,
            ["the", "quick", "brown", "fox", "jumps", "over", "the", "lazy", "dog"]
        );
        spec.limit = Some(3);
        assert_eq!(load_corpus_words(&spec), ["the", "quick", "brown"]);
    }

    #[test]
    fn plain_words_format() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "alpha beta\ngamma x").unwrap();
        file.flush().unwrap();
        let spec = CorpusSpec {
            format: CorpusFormat::PlainWords,
            ..CorpusSpec::new(file.path())
        };
        assert_eq!(load_corpus_words(&spec), ["alpha", "beta", "gamma"]);
    }
}
