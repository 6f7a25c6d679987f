//! Noun lemmatization: exception list first, then the standard WordNet
//! detachment rules, keeping only candidates that exist in the index.

use super::Lexicon;

/// Suffix detachment rules for nouns, applied in this order.
const RULES: &[(&str, &str)] = &[
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("men", "man"),
    ("ies", "y"),
    ("s", ""),
];

pub(super) fn morphy(lex: &Lexicon, surface: &str) -> Vec<String> {
    assert!(!surface.is_empty(), "morphy: empty surface form");
    let norm = surface.to_lowercase();
    let mut out: Vec<String> = Vec::new();
    let mut push = |cand: String, out: &mut Vec<String>| {
        if lex.contains_lemma(&cand) && !out.contains(&cand) {
            out.push(cand);
        }
    };
    if let Some(bases) = lex.exception_bases(&norm) {
        for base in bases {
            push(base.clone(), &mut out);
        }
    }
    push(norm.clone(), &mut out);
    for (suffix, replacement) in RULES {
        if let Some(stem) = norm.strip_suffix(suffix) {
            let cand = format!("{stem}{replacement}");
            if !cand.is_empty() {
                push(cand, &mut out);
            }
        }
    }
    out
}
