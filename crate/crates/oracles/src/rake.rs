//! Brute-force RAKE scoring: enumerate candidate phrases, build the full
//! word-by-word co-occurrence matrix over occurrence pairs, then score
//! each word as degree / frequency.

use std::collections::HashMap;

fn is_punct(token: &str) -> bool {
    !token.is_empty() && token.chars().all(|c| ".,!?'\";:".contains(c))
}

/// Split a sentence into candidate phrases at stopwords and punctuation
/// tokens. Stopwords and punctuation never appear inside a phrase.
pub fn phrases(sentence: &[String], stoplist: &[String]) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut cur: Vec<String> = Vec::new();
    for tok in sentence {
        if is_punct(tok) || stoplist.iter().any(|s| s == tok) {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(tok.clone());
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

/// deg(w) / freq(w) for every candidate word of the sentence.
///
/// The co-occurrence matrix counts every ordered pair of occurrences
/// within a phrase, including a word occurrence paired with itself, so
/// each occurrence of `w` in a phrase of length L contributes L to
/// deg(w).
pub fn word_scores(sentence: &[String], stoplist: &[String]) -> HashMap<String, f64> {
    let phrases = phrases(sentence, stoplist);
    let mut cooc: HashMap<(String, String), u64> = HashMap::new();
    let mut freq: HashMap<String, u64> = HashMap::new();
    for phrase in &phrases {
        for a in phrase {
            *freq.entry(a.clone()).or_insert(0) += 1;
            for b in phrase {
                *cooc.entry((a.clone(), b.clone())).or_insert(0) += 1;
            }
        }
    }
    let mut scores = HashMap::new();
    for (word, f) in &freq {
        let deg: u64 = cooc
            .iter()
            .filter(|((a, _), _)| a == word)
            .map(|(_, c)| *c)
            .sum();
        scores.insert(word.clone(), deg as f64 / *f as f64);
    }
    scores
}

/// Argmax word of a sentence under `word_scores`, ties broken by the
/// earliest first occurrence in the sentence. Falls back to the first
/// non-punctuation token (then the first token) when no word scores.
pub fn best_word(sentence: &[String], stoplist: &[String]) -> String {
    let scores = word_scores(sentence, stoplist);
    let mut best: Option<(f64, usize, &String)> = None;
    for (pos, tok) in sentence.iter().enumerate() {
        if let Some(&score) = scores.get(tok) {
            let first_pos = sentence.iter().position(|t| t == tok).unwrap();
            if first_pos != pos {
                continue; // only consider each word at its first occurrence
            }
            match best {
                Some((b, bp, _)) if score < b || (score == b && pos >= bp) => {}
                _ => best = Some((score, pos, tok)),
            }
        }
    }
    if let Some((_, _, tok)) = best {
        return tok.clone();
    }
    sentence
        .iter()
        .find(|t| !is_punct(t))
        .unwrap_or(&sentence[0])
        .clone()
}
