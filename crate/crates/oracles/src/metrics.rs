//! Brute-force diversity and overlap metrics: explicit n-gram multisets,
//! set intersections, clipped BLEU counts, cosine similarities.

use std::collections::{HashMap, HashSet};

/// All contiguous n-grams of a token sequence, in order (a multiset).
pub fn ngram_list(tokens: &[String], n: usize) -> Vec<Vec<String>> {
    if n == 0 || tokens.len() < n {
        return Vec::new();
    }
    (0..=tokens.len() - n).map(|i| tokens[i..i + n].to_vec()).collect()
}

fn distinct(grams: &[Vec<String>]) -> HashSet<Vec<String>> {
    grams.iter().cloned().collect()
}

/// Inter-story repetition at sentence position `i` (1-based):
/// 1 - distinct/total over the pooled i-th-sentence n-grams of all
/// stories. `None` when the pool holds no n-grams.
pub fn inter_rep(stories: &[Vec<Vec<String>>], i: usize, n: usize) -> Option<f64> {
    let mut pool = Vec::new();
    for story in stories {
        pool.extend(ngram_list(&story[i - 1], n));
    }
    if pool.is_empty() {
        return None;
    }
    Some(1.0 - distinct(&pool).len() as f64 / pool.len() as f64)
}

/// Intra-story repetition at sentence position `i` (1-based): per story,
/// the mean over earlier sentences of the distinct-n-gram overlap with
/// sentence i, averaged over stories. Position 1 is 0 by definition, and
/// a story whose sentence i has no n-grams contributes 0.
pub fn intra_rep(stories: &[Vec<Vec<String>>], i: usize, n: usize) -> f64 {
    if i <= 1 || stories.is_empty() {
        return 0.0;
    }
    let mut total = 0.0;
    for story in stories {
        let d_i = distinct(&ngram_list(&story[i - 1], n));
        if d_i.is_empty() {
            continue;
        }
        let mut overlap = 0.0;
        for k in 0..i - 1 {
            let d_k = distinct(&ngram_list(&story[k], n));
            overlap += d_i.intersection(&d_k).count() as f64;
        }
        total += overlap / ((i - 1) as f64 * d_i.len() as f64);
    }
    total / stories.len() as f64
}

/// Aggregate inter-story repetition: distinct/total over every sentence
/// of every story pooled together (n-grams never cross sentence
/// boundaries).
pub fn inter_rep_agg(stories: &[Vec<Vec<String>>], n: usize) -> Option<f64> {
    let mut pool = Vec::new();
    for story in stories {
        for sentence in story {
            pool.extend(ngram_list(sentence, n));
        }
    }
    if pool.is_empty() {
        return None;
    }
    Some(1.0 - distinct(&pool).len() as f64 / pool.len() as f64)
}

/// Aggregate intra-story repetition: mean of the per-position intra
/// rates over the `m` sentence positions.
pub fn intra_rep_agg(stories: &[Vec<Vec<String>>], m: usize, n: usize) -> f64 {
    let sum: f64 = (1..=m).map(|i| intra_rep(stories, i, n)).sum();
    sum / m as f64
}

fn count_grams(tokens: &[String], n: usize) -> HashMap<Vec<String>, u64> {
    let mut counts = HashMap::new();
    for g in ngram_list(tokens, n) {
        *counts.entry(g).or_insert(0) += 1;
    }
    counts
}

/// Corpus BLEU with one reference per hypothesis: cumulative BLEU-1..max_n
/// as percentages, with clipped modified precision and brevity penalty.
pub fn bleu(hyps: &[Vec<String>], refs: &[Vec<String>], max_n: usize) -> Vec<f64> {
    assert_eq!(hyps.len(), refs.len());
    let mut matched = vec![0u64; max_n];
    let mut total = vec![0u64; max_n];
    let mut hyp_len = 0u64;
    let mut ref_len = 0u64;
    for (hyp, rf) in hyps.iter().zip(refs) {
        hyp_len += hyp.len() as u64;
        ref_len += rf.len() as u64;
        for n in 1..=max_n {
            let h = count_grams(hyp, n);
            let r = count_grams(rf, n);
            for (g, c) in &h {
                total[n - 1] += c;
                matched[n - 1] += (*c).min(*r.get(g).unwrap_or(&0));
            }
        }
    }
    let bp = if hyp_len > ref_len || hyp_len == 0 {
        1.0
    } else {
        (1.0 - ref_len as f64 / hyp_len as f64).exp()
    };
    let mut out = Vec::new();
    for k in 1..=max_n {
        let mut log_sum = 0.0;
        let mut zero = false;
        for n in 1..=k {
            if matched[n - 1] == 0 || total[n - 1] == 0 {
                zero = true;
                break;
            }
            log_sum += (matched[n - 1] as f64 / total[n - 1] as f64).ln() / k as f64;
        }
        out.push(if zero { 0.0 } else { 100.0 * bp * log_sum.exp() });
    }
    out
}

fn cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        dot / (na * nb)
    }
}

/// Mean over storyline positions of the best cosine match between the
/// storyline word and the tokens of its sentence. Out-of-vocabulary
/// tokens map to the zero vector; an empty sentence contributes 0.
pub fn greedy_match(
    storyline: &[String],
    story: &[Vec<String>],
    emb: &HashMap<String, Vec<f64>>,
    dim: usize,
) -> f64 {
    let zero = vec![0.0; dim];
    let lookup = |t: &String| emb.get(t).cloned().unwrap_or_else(|| zero.clone());
    let mut total = 0.0;
    for (word, sentence) in storyline.iter().zip(story) {
        let wv = lookup(word);
        let best = sentence
            .iter()
            .map(|t| cosine(&wv, &lookup(t)))
            .fold(f64::NEG_INFINITY, f64::max);
        if best.is_finite() {
            total += best;
        }
    }
    total / storyline.len() as f64
}

/// Fraction of storyline words whose exact token appears anywhere in the
/// story.
pub fn usage_rate(storyline: &[String], story: &[Vec<String>]) -> f64 {
    let hits = storyline
        .iter()
        .filter(|w| story.iter().any(|s| s.contains(w)))
        .count();
    hits as f64 / storyline.len() as f64
}
