//! Corpus ingestion: tokenization, the ROCStories-style CSV reader, the
//! vocabulary, and deterministic train/validation/test splits.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::nn::Rng;

/// Reserved token ids. Specials occupy ids 0-5 in every vocabulary.
pub const PAD: usize = 0;
pub const UNK: usize = 1;
pub const BOS: usize = 2;
pub const EOS: usize = 3;
pub const EOT: usize = 4;
pub const SEP: usize = 5;

/// Surface forms of the special tokens, in id order.
pub const SPECIAL_TOKENS: [&str; 6] = ["<pad>", "<unk>", "<bos>", "<eos>", "<eot>", "<sep>"];

const PUNCT: &[char] = &['.', ',', '!', '?', '\'', '"', ';', ':'];

/// True for tokens that consist entirely of the punctuation marks the
/// tokenizer isolates.
pub fn is_punct_token(token: &str) -> bool {
    !token.is_empty() && token.chars().all(|c| PUNCT.contains(&c))
}

/// Lowercase, split the punctuation marks `. , ! ? ' " ; :` into their
/// own tokens, and split on whitespace otherwise. Empty input yields an
/// empty list; no token is ever empty.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    for c in text.to_lowercase().chars() {
        if PUNCT.contains(&c) {
            if !current.is_empty() {
                tokens.push(std::mem::take(&mut current));
            }
            tokens.push(c.to_string());
        } else if c.is_whitespace() {
            if !current.is_empty() {
                tokens.push(std::mem::take(&mut current));
            }
        } else {
            current.push(c);
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

/// A title plus exactly five non-empty tokenized sentences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Story {
    pub id: String,
    pub title: Vec<String>,
    pub sentences: [Vec<String>; 5],
}

impl Story {
    /// Tokenize raw fields into a story, enforcing the non-empty
    /// invariants. `context` prefixes error messages (e.g. "file.csv:3").
    pub fn from_fields(
        id: &str,
        title: &str,
        sentences: [&str; 5],
        context: &str,
    ) -> Result<Story> {
        let title_tokens = tokenize(title);
        if title_tokens.is_empty() {
            return Err(Error::data(format!("{context}: empty title")));
        }
        let mut sent_tokens: [Vec<String>; 5] = Default::default();
        for (k, raw) in sentences.iter().enumerate() {
            let toks = tokenize(raw);
            if toks.is_empty() {
                return Err(Error::data(format!(
                    "{context}: sentence {} empty after tokenization",
                    k + 1
                )));
            }
            sent_tokens[k] = toks;
        }
        Ok(Story {
            id: id.to_string(),
            title: title_tokens,
            sentences: sent_tokens,
        })
    }
}

/// Read a corpus CSV: header row, then 7 fields per row
/// (`storyid,storytitle,sentence1..sentence5`, RFC-4180 quoting).
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Vec<Story>> {
    let path = path.as_ref();
    let name = path.display().to_string();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_path(path)
        .map_err(|e| Error::data(format!("{name}: {e}")))?;
    let mut stories = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::data(format!("{name}: {e}")))?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 7 {
            return Err(Error::data(format!(
                "{name}:{line}: expected 7 fields, found {}",
                record.len()
            )));
        }
        let story = Story::from_fields(
            &record[0],
            &record[1],
            [&record[2], &record[3], &record[4], &record[5], &record[6]],
            &format!("{name}:{line}"),
        )?;
        stories.push(story);
    }
    if stories.is_empty() {
        return Err(Error::data(format!("{name}: no story rows")));
    }
    Ok(stories)
}

/// Bidirectional token/id map. Ids 0-5 are the specials; corpus tokens
/// follow, ordered by descending frequency then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    token_to_id: HashMap<String, usize>,
    id_to_token: Vec<String>,
}

impl Vocabulary {
    /// Build from stories, keeping tokens with frequency >= `min_freq`.
    /// Corpus tokens that collide with a special surface form are
    /// dropped (they map to UNK on lookup).
    pub fn build(stories: &[Story], min_freq: u64) -> Result<Vocabulary> {
        if min_freq < 1 {
            return Err(Error::usage("min_freq must be >= 1".to_string()));
        }
        let mut freq: HashMap<&str, u64> = HashMap::new();
        for story in stories {
            for tok in story.title.iter().chain(story.sentences.iter().flatten()) {
                *freq.entry(tok).or_insert(0) += 1;
            }
        }
        let mut kept: Vec<(&str, u64)> = freq
            .into_iter()
            .filter(|(t, f)| *f >= min_freq && !SPECIAL_TOKENS.contains(t))
            .collect();
        kept.sort_by(|(ta, fa), (tb, fb)| fb.cmp(fa).then_with(|| ta.cmp(tb)));

        let mut id_to_token: Vec<String> =
            SPECIAL_TOKENS.iter().map(|s| s.to_string()).collect();
        id_to_token.extend(kept.iter().map(|(t, _)| t.to_string()));
        let token_to_id = id_to_token
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(Vocabulary {
            token_to_id,
            id_to_token,
        })
    }

    pub fn from_tokens(tokens: Vec<String>) -> Result<Vocabulary> {
        if tokens.len() < SPECIAL_TOKENS.len()
            || tokens[..6] != SPECIAL_TOKENS.map(str::to_string)
        {
            return Err(Error::data(
                "vocabulary must start with the six special tokens".to_string(),
            ));
        }
        let token_to_id: HashMap<String, usize> = tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        if token_to_id.len() != tokens.len() {
            return Err(Error::data("vocabulary contains duplicate tokens".to_string()));
        }
        Ok(Vocabulary {
            token_to_id,
            id_to_token: tokens,
        })
    }

    pub fn len(&self) -> usize {
        self.id_to_token.len()
    }

    pub fn is_empty(&self) -> bool {
        self.id_to_token.is_empty()
    }

    /// Token id, falling back to UNK for out-of-vocabulary tokens.
    pub fn id(&self, token: &str) -> usize {
        self.token_to_id.get(token).copied().unwrap_or(UNK)
    }

    pub fn token(&self, id: usize) -> &str {
        &self.id_to_token[id]
    }

    pub fn tokens(&self) -> &[String] {
        &self.id_to_token
    }

    pub fn encode(&self, tokens: &[String]) -> Vec<usize> {
        tokens.iter().map(|t| self.id(t)).collect()
    }

    pub fn decode(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.token(i).to_string()).collect()
    }

    /// FNV-1a over the token list; used to check that a planner and a
    /// writer checkpoint were trained against the same vocabulary.
    pub fn hash64(&self) -> u64 {
        let mut hash: u64 = 0xcbf29ce484222325;
        for token in &self.id_to_token {
            for byte in token.as_bytes().iter().chain(b"\n") {
                hash ^= u64::from(*byte);
                hash = hash.wrapping_mul(0x100000001b3);
            }
        }
        hash
    }

    /// One token per line, line number = id.
    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut out = String::new();
        for token in &self.id_to_token {
            let _ = writeln!(out, "{token}");
        }
        fs::write(path, out)?;
        Ok(())
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Vocabulary> {
        let text = fs::read_to_string(path)?;
        Vocabulary::from_tokens(text.lines().map(str::to_string).collect())
    }
}

/// Disjoint 8:1:1 partition of a corpus under a seed.
#[derive(Debug, Clone)]
pub struct CorpusSplit {
    pub train: Vec<Story>,
    pub valid: Vec<Story>,
    pub test: Vec<Story>,
    pub seed: u64,
}

/// Shuffle deterministically under `seed`, then carve off floor(n/10)
/// stories each for validation and test; the remainder goes to train.
pub fn split_corpus(mut stories: Vec<Story>, seed: u64) -> Result<CorpusSplit> {
    let n = stories.len();
    if n < 10 {
        return Err(Error::usage(format!(
            "split requires at least 10 stories, got {n}"
        )));
    }
    Rng::seeded(seed).shuffle(&mut stories);
    let tenth = n / 10;
    let test = stories.split_off(n - tenth);
    let valid = stories.split_off(n - 2 * tenth);
    Ok(CorpusSplit {
        train: stories,
        valid,
        test,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE1_SENTENCES: [&str; 5] = [
        "Carrie had just learned how to ride a bike.",
        "She didn't have a bike of her own.",
        "Carrie would sneak rides on her sister's bike.",
        "She got nervous on a hill and crashed into a wall.",
        "The bike frame bent and Carrie got a deep gash on her leg.",
    ];

    fn table1_story() -> Story {
        Story::from_fields("s1", "The Bike Accident", TABLE1_SENTENCES, "test").unwrap()
    }

    #[test]
    fn tokenize_sentence_with_punctuation() {
        assert_eq!(
            tokenize("Carrie had just learned how to ride a bike."),
            ["carrie", "had", "just", "learned", "how", "to", "ride", "a", "bike", "."]
        );
    }

    #[test]
    fn tokenize_empty_input() {
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn tokenize_splits_apostrophes_and_exclamations() {
        assert_eq!(tokenize("Don't stop!"), ["don", "'", "t", "stop", "!"]);
    }

    #[test]
    fn tokenize_roundtrip_is_idempotent() {
        for text in ["Hello, world!", "she said: \"don't\"", "a  b\tc"] {
            let once = tokenize(text);
            let twice = tokenize(&once.join(" "));
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn load_single_story_csv() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.csv");
        let mut csv = String::from("storyid,storytitle,sentence1,sentence2,sentence3,sentence4,sentence5\n");
        csv.push_str(&format!(
            "s1,The Bike Accident,{},\"{}\",{},{},{}\n",
            TABLE1_SENTENCES[0],
            TABLE1_SENTENCES[1].replace('"', "\"\""),
            TABLE1_SENTENCES[2].replace(',', ""),
            TABLE1_SENTENCES[3],
            TABLE1_SENTENCES[4]
        ));
        std::fs::write(&path, csv).unwrap();
        let stories = load_corpus(&path).unwrap();
        assert_eq!(stories.len(), 1);
        assert_eq!(stories[0].title, ["the", "bike", "accident"]);
        assert_eq!(stories[0].sentences.len(), 5);
        assert!(stories[0].sentences.iter().all(|s| !s.is_empty()));
    }

    #[test]
    fn load_rejects_wrong_arity_with_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");
        std::fs::write(
            &path,
            "storyid,storytitle,sentence1,sentence2,sentence3,sentence4,sentence5\n\
             s1,t,a,b,c,d,e\n\
             s2,t,a,b,c,d\n",
        )
        .unwrap();
        let err = load_corpus(&path).unwrap_err().to_string();
        assert!(err.contains(":3:"), "expected line 3 in: {err}");
        assert!(err.contains("6"), "expected field count in: {err}");
    }

    #[test]
    fn load_rejects_empty_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.csv");
        std::fs::write(&path, "storyid,storytitle,sentence1,sentence2,sentence3,sentence4,sentence5\n").unwrap();
        assert!(load_corpus(&path).is_err());
    }

    #[test]
    fn vocab_of_empty_corpus_is_specials_only() {
        let vocab = Vocabulary::build(&[], 1).unwrap();
        assert_eq!(vocab.len(), 6);
        assert_eq!(vocab.token(PAD), "<pad>");
        assert_eq!(vocab.token(SEP), "<sep>");
    }

    #[test]
    fn vocab_contains_every_distinct_table1_token() {
        let story = table1_story();
        let vocab = Vocabulary::build(std::slice::from_ref(&story), 1).unwrap();
        let mut distinct: Vec<&String> =
            story.title.iter().chain(story.sentences.iter().flatten()).collect();
        distinct.sort();
        distinct.dedup();
        assert_eq!(vocab.len(), 6 + distinct.len());
        for tok in distinct {
            assert_ne!(vocab.id(tok), UNK, "missing token {tok}");
        }
    }

    #[test]
    fn vocab_ids_ordered_by_frequency_then_lexicographic() {
        let story = table1_story();
        let vocab = Vocabulary::build(std::slice::from_ref(&story), 1).unwrap();
        // "bike" appears 4 times counting the title, more than any other
        // non-special token except ties; it must come before singletons.
        let bike = vocab.id("bike");
        let sneak = vocab.id("sneak");
        assert!(bike < sneak);
        // Round trip over every non-special token.
        for id in 6..vocab.len() {
            assert_eq!(vocab.id(vocab.token(id)), id);
        }
    }

    #[test]
    fn vocab_min_freq_filters_singletons() {
        let story = table1_story();
        let vocab = Vocabulary::build(std::slice::from_ref(&story), 2).unwrap();
        assert_ne!(vocab.id("bike"), UNK);
        assert_eq!(vocab.id("sneak"), UNK); // appears once
    }

    #[test]
    fn vocab_file_roundtrip() {
        let story = table1_story();
        let vocab = Vocabulary::build(std::slice::from_ref(&story), 1).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("vocab.txt");
        vocab.write_file(&path).unwrap();
        let loaded = Vocabulary::read_file(&path).unwrap();
        assert_eq!(vocab, loaded);
        assert_eq!(vocab.hash64(), loaded.hash64());
    }

    fn toy_stories(n: usize) -> Vec<Story> {
        (0..n)
            .map(|i| {
                Story::from_fields(
                    &format!("s{i}"),
                    &format!("title {i}"),
                    ["one.", "two.", "three.", "four.", "five."],
                    "test",
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn split_ten_stories_is_8_1_1() {
        let split = split_corpus(toy_stories(10), 0).unwrap();
        assert_eq!(split.train.len(), 8);
        assert_eq!(split.valid.len(), 1);
        assert_eq!(split.test.len(), 1);
    }

    #[test]
    fn split_remainder_goes_to_train() {
        // Floor arithmetic mirror of the 98,161 -> 78,529/9,816/9,816 case.
        let n = 97;
        let split = split_corpus(toy_stories(n), 3).unwrap();
        assert_eq!(split.valid.len(), 9);
        assert_eq!(split.test.len(), 9);
        assert_eq!(split.train.len(), n - 18);
    }

    #[test]
    fn split_is_deterministic_and_seed_sensitive() {
        let a = split_corpus(toy_stories(30), 1).unwrap();
        let b = split_corpus(toy_stories(30), 1).unwrap();
        let c = split_corpus(toy_stories(30), 2).unwrap();
        let ids = |s: &[Story]| s.iter().map(|st| st.id.clone()).collect::<Vec<_>>();
        assert_eq!(ids(&a.train), ids(&b.train));
        assert_eq!(ids(&a.valid), ids(&b.valid));
        assert_eq!(ids(&a.test), ids(&b.test));
        assert_ne!(ids(&a.train), ids(&c.train));
        assert_eq!(c.train.len(), 24);
    }

    #[test]
    fn split_partition_is_disjoint_and_complete() {
        let split = split_corpus(toy_stories(23), 7).unwrap();
        let mut all: Vec<String> = split
            .train
            .iter()
            .chain(&split.valid)
            .chain(&split.test)
            .map(|s| s.id.clone())
            .collect();
        all.sort();
        let mut expected: Vec<String> = (0..23).map(|i| format!("s{i}")).collect();
        expected.sort();
        assert_eq!(all, expected);
    }

    #[test]
    fn split_rejects_tiny_corpora() {
        assert!(split_corpus(toy_stories(9), 0).is_err());
    }
}
