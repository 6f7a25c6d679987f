//! Line-level parsing of the WordNet 3.0 plain-text noun database.
//!
//! `index.noun`: `lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt
//! tagsense_cnt synset_offset...`
//!
//! `data.noun`: `synset_offset lex_filenum ss_type w_cnt word lex_id
//! [word lex_id...] p_cnt [ptr...] | gloss` where `w_cnt` is two hex digits,
//! `p_cnt` three decimal digits, and each pointer is
//! `symbol synset_offset pos source/target`.
//!
//! License-header lines (leading two spaces) are skipped in both files.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use super::{normalize_lemma, Lexicon, Offset, Synset, WordNetError};

/// Parse the three database files into a validated [`Lexicon`].
pub fn parse_database(
    index_noun: &Path,
    data_noun: &Path,
    noun_exc: &Path,
) -> Result<Lexicon, WordNetError> {
    let (synsets, data_lines) = parse_data(data_noun)?;
    let index = parse_index(index_noun, &synsets)?;
    let exceptions = parse_exceptions(noun_exc)?;

    // Every hypernym pointer must resolve within the loaded database.
    for syn in synsets.values() {
        for hyp in &syn.hypernyms {
            if !synsets.contains_key(hyp) {
                return Err(WordNetError::Parse {
                    file: file_name(data_noun),
                    line: data_lines[&syn.offset],
                    what: format!("hypernym pointer to unknown synset {hyp}"),
                });
            }
        }
    }

    Lexicon::assemble(synsets, index, exceptions)
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn open(path: &Path) -> Result<BufReader<File>, WordNetError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| WordNetError::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn read_line_io(path: &Path, line: std::io::Result<String>) -> Result<String, WordNetError> {
    line.map_err(|source| WordNetError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn is_header(line: &str) -> bool {
    line.starts_with("  ")
}

struct Fields<'a> {
    file: &'a str,
    line_no: usize,
    toks: std::str::SplitWhitespace<'a>,
}

impl<'a> Fields<'a> {
    fn new(file: &'a str, line_no: usize, line: &'a str) -> Self {
        Fields {
            file,
            line_no,
            toks: line.split_whitespace(),
        }
    }

    fn err(&self, what: impl Into<String>) -> WordNetError {
        WordNetError::Parse {
            file: self.file.to_string(),
            line: self.line_no,
            what: what.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<&'a str, WordNetError> {
        self.toks
            .next()
            .ok_or_else(|| self.err(format!("missing field: {what}")))
    }

    fn next_usize(&mut self, what: &str, radix: u32) -> Result<usize, WordNetError> {
        let tok = self.next(what)?;
        usize::from_str_radix(tok, radix)
            .map_err(|_| self.err(format!("bad {what} field {tok:?}")))
    }

    fn next_offset(&mut self, what: &str) -> Result<Offset, WordNetError> {
        let tok = self.next(what)?;
        tok.parse::<u64>()
            .map(Offset)
            .map_err(|_| self.err(format!("bad {what} offset {tok:?}")))
    }
}

fn parse_data(
    path: &Path,
) -> Result<(BTreeMap<Offset, Synset>, BTreeMap<Offset, usize>), WordNetError> {
    let file = file_name(path);
    let mut synsets = BTreeMap::new();
    let mut lines = BTreeMap::new();
    for (idx, line) in open(path)?.lines().enumerate() {
        let line = read_line_io(path, line)?;
        let line_no = idx + 1;
        if is_header(&line) || line.trim().is_empty() {
            continue;
        }
        let (record, gloss) = match line.split_once('|') {
            Some((rec, gloss)) => (rec, gloss.trim().to_string()),
            None => (line.as_str(), String::new()),
        };
        let mut f = Fields::new(&file, line_no, record);
        let offset = f.next_offset("synset_offset")?;
        let _lex_filenum = f.next("lex_filenum")?;
        let ss_type = f.next("ss_type")?;
        if ss_type != "n" {
            return Err(f.err(format!("unexpected ss_type {ss_type:?} in noun data")));
        }
        let w_cnt = f.next_usize("w_cnt", 16)?;
        if w_cnt == 0 {
            return Err(f.err("synset with no words"));
        }
        let mut lemmas = Vec::with_capacity(w_cnt);
        for _ in 0..w_cnt {
            let word = f.next("word")?;
            let _lex_id = f.next("lex_id")?;
            lemmas.push(normalize_lemma(word));
        }
        let p_cnt = f.next_usize("p_cnt", 10)?;
        let mut hypernyms = Vec::new();
        for _ in 0..p_cnt {
            let symbol = f.next("pointer_symbol")?;
            let target = f.next_offset("pointer_offset")?;
            let pos = f.next("pointer_pos")?;
            let _source_target = f.next("pointer_source/target")?;
            // `@` hypernym and `@i` instance hypernym both count as edges.
            if (symbol == "@" || symbol == "@i") && pos == "n" {
                hypernyms.push(target);
            }
        }
        if synsets
            .insert(
                offset,
                Synset {
                    offset,
                    lemmas,
                    hypernyms,
                    gloss,
                },
            )
            .is_some()
        {
            return Err(f.err(format!("duplicate synset offset {offset}")));
        }
        lines.insert(offset, line_no);
    }
    Ok((synsets, lines))
}

fn parse_index(
    path: &Path,
    synsets: &BTreeMap<Offset, Synset>,
) -> Result<BTreeMap<String, Vec<Offset>>, WordNetError> {
    let file = file_name(path);
    let mut index = BTreeMap::new();
    for (idx, line) in open(path)?.lines().enumerate() {
        let line = read_line_io(path, line)?;
        let line_no = idx + 1;
        if is_header(&line) || line.trim().is_empty() {
            continue;
        }
        let mut f = Fields::new(&file, line_no, &line);
        let lemma = normalize_lemma(f.next("lemma")?);
        let pos = f.next("pos")?;
        if pos != "n" {
            return Err(f.err(format!("unexpected pos {pos:?} in noun index")));
        }
        let synset_cnt = f.next_usize("synset_cnt", 10)?;
        let p_cnt = f.next_usize("p_cnt", 10)?;
        for _ in 0..p_cnt {
            f.next("ptr_symbol")?;
        }
        let _sense_cnt = f.next("sense_cnt")?;
        let _tagsense_cnt = f.next("tagsense_cnt")?;
        let mut offsets = Vec::with_capacity(synset_cnt);
        for _ in 0..synset_cnt {
            let off = f.next_offset("synset_offset")?;
            if !synsets.contains_key(&off) {
                return Err(f.err(format!("index entry references unknown synset {off}")));
            }
            offsets.push(off);
        }
        if offsets.is_empty() {
            return Err(f.err("index entry with no synsets"));
        }
        if index.insert(lemma.clone(), offsets).is_some() {
            return Err(f.err(format!("duplicate index lemma {lemma:?}")));
        }
    }
    Ok(index)
}

fn parse_exceptions(path: &Path) -> Result<BTreeMap<String, Vec<String>>, WordNetError> {
    let file = file_name(path);
    let mut exceptions = BTreeMap::new();
    for (idx, line) in open(path)?.lines().enumerate() {
        let line = read_line_io(path, line)?;
        let line_no = idx + 1;
        if is_header(&line) || line.trim().is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let form = match toks.next() {
            Some(form) => normalize_lemma(form),
            None => continue,
        };
        let bases: Vec<String> = toks.map(normalize_lemma).collect();
        if bases.is_empty() {
            return Err(WordNetError::Parse {
                file: file.clone(),
                line: line_no,
                what: format!("exception {form:?} lists no base form"),
            });
        }
        exceptions.insert(form, bases);
    }
    Ok(exceptions)
}
