//! Raw WordNet 3.0 noun database: parsing, lemma lookup, hypernym closure
//! and the person/animal character test.

mod morph;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

pub use parse::parse_database;

/// Synset identifier: the byte offset of its record in `data.noun`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Offset(pub u64);

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:08}", self.0)
    }
}

#[derive(Debug, Error)]
pub enum WordNetError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{file}:{line}: malformed record: {what}")]
    Parse {
        file: String,
        line: usize,
        what: String,
    },
    #[error("lexicon incomplete: {0}")]
    LexiconIncomplete(String),
    #[error("unknown synset offset {0}")]
    UnknownSynset(Offset),
    #[error("hypernym cycle through offset {0}")]
    HypernymCycle(Offset),
    #[error("word has no base form in the lexicon: {0:?}")]
    NotInLexicon(String),
}

/// One noun synset: its member lemmas, hypernym edges and gloss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Synset {
    pub offset: Offset,
    pub lemmas: Vec<String>,
    pub hypernyms: Vec<Offset>,
    pub gloss: String,
}

/// What the hypernym walk says about a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CharacterKind {
    Person,
    Animal,
    NotACharacter,
}

impl fmt::Display for CharacterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterKind::Person => write!(f, "person"),
            CharacterKind::Animal => write!(f, "animal"),
            CharacterKind::NotACharacter => write!(f, "none"),
        }
    }
}

/// Which senses of a polysemous word the classifier inspects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SensePolicy {
    /// First (most frequent) noun sense of the first base form only.
    #[default]
    FirstSense,
    /// Scan senses in index order; the first sense whose closure reaches
    /// person or animal decides.
    AnySense,
}

/// The parsed noun database. Immutable after [`parse_database`] returns.
#[derive(Debug, Clone)]
pub struct Lexicon {
    synsets: BTreeMap<Offset, Synset>,
    /// lemma (lowercase, underscores for spaces) -> offsets in sense order.
    index: BTreeMap<String, Vec<Offset>>,
    /// irregular inflected form -> base forms, from `noun.exc`.
    exceptions: BTreeMap<String, Vec<String>>,
    person_root: Offset,
    animal_root: Offset,
}

impl Lexicon {
    pub(crate) fn assemble(
        synsets: BTreeMap<Offset, Synset>,
        index: BTreeMap<String, Vec<Offset>>,
        exceptions: BTreeMap<String, Vec<String>>,
    ) -> Result<Self, WordNetError> {
        let first_sense = |lemma: &str| -> Result<Offset, WordNetError> {
            index
                .get(lemma)
                .and_then(|offs| offs.first().copied())
                .ok_or_else(|| {
                    WordNetError::LexiconIncomplete(format!("lemma {lemma:?} not in index"))
                })
        };
        let person_root = first_sense("person")?;
        let animal_root = first_sense("animal")?;
        if person_root == animal_root {
            return Err(WordNetError::LexiconIncomplete(
                "person and animal resolve to the same synset".into(),
            ));
        }
        let lex = Lexicon {
            synsets,
            index,
            exceptions,
            person_root,
            animal_root,
        };
        lex.check_acyclic()?;
        Ok(lex)
    }

    /// Iterative depth-first search for a cycle in the hypernym relation.
    fn check_acyclic(&self) -> Result<(), WordNetError> {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color: BTreeMap<Offset, u8> = BTreeMap::new();
        for &start in self.synsets.keys() {
            if color.get(&start).copied().unwrap_or(WHITE) != WHITE {
                continue;
            }
            // stack of (node, next child index)
            let mut stack = vec![(start, 0usize)];
            color.insert(start, GRAY);
            while let Some(&mut (node, ref mut child)) = stack.last_mut() {
                let hypernyms = &self.synsets[&node].hypernyms;
                if *child < hypernyms.len() {
                    let next = hypernyms[*child];
                    *child += 1;
                    match color.get(&next).copied().unwrap_or(WHITE) {
                        WHITE => {
                            color.insert(next, GRAY);
                            stack.push((next, 0));
                        }
                        GRAY => return Err(WordNetError::HypernymCycle(next)),
                        _ => {}
                    }
                } else {
                    color.insert(node, BLACK);
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    pub fn synset(&self, offset: Offset) -> Option<&Synset> {
        self.synsets.get(&offset)
    }

    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.values()
    }

    pub fn synset_count(&self) -> usize {
        self.synsets.len()
    }

    /// Sense-ordered offsets for an index lemma (empty if absent).
    pub fn senses(&self, lemma: &str) -> &[Offset] {
        self.index
            .get(&normalize_lemma(lemma))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn contains_lemma(&self, lemma: &str) -> bool {
        self.index.contains_key(&normalize_lemma(lemma))
    }

    pub fn person_root(&self) -> Offset {
        self.person_root
    }

    pub fn animal_root(&self) -> Offset {
        self.animal_root
    }

    pub(crate) fn exception_bases(&self, form: &str) -> Option<&[String]> {
        self.exceptions.get(form).map(Vec::as_slice)
    }

    /// Candidate base forms for a surface token, best first. Empty when the
    /// word cannot be reduced to anything in the noun index.
    pub fn morphy(&self, surface: &str) -> Vec<String> {
        morph::morphy(self, surface)
    }

    /// All synsets reachable from `start` over hypernym edges, excluding
    /// `start` itself.
    pub fn hypernym_closure(&self, start: Offset) -> Result<BTreeSet<Offset>, WordNetError> {
        let root = self
            .synsets
            .get(&start)
            .ok_or(WordNetError::UnknownSynset(start))?;
        let mut seen = BTreeSet::new();
        let mut frontier: Vec<Offset> = root.hypernyms.clone();
        while let Some(off) = frontier.pop() {
            if off != start && seen.insert(off) {
                if let Some(syn) = self.synsets.get(&off) {
                    frontier.extend(syn.hypernyms.iter().copied());
                }
            }
        }
        Ok(seen)
    }

    fn kind_of_sense(&self, sense: Offset) -> Result<CharacterKind, WordNetError> {
        let closure = self.hypernym_closure(sense)?;
        if sense == self.person_root || closure.contains(&self.person_root) {
            Ok(CharacterKind::Person)
        } else if sense == self.animal_root || closure.contains(&self.animal_root) {
            Ok(CharacterKind::Animal)
        } else {
            Ok(CharacterKind::NotACharacter)
        }
    }

    /// Person/animal test for a single token.
    ///
    /// `Err(NotInLexicon)` is a normal pipeline outcome (the word feeds the
    /// extraction failure inventory), distinct from `Ok(NotACharacter)`.
    pub fn classify_character(
        &self,
        word: &str,
        policy: SensePolicy,
    ) -> Result<CharacterKind, WordNetError> {
        assert!(!word.is_empty(), "classify_character: empty word");
        let candidates = self.morphy(word);
        let Some(first) = candidates.first() else {
            return Err(WordNetError::NotInLexicon(word.to_lowercase()));
        };
        match policy {
            SensePolicy::FirstSense => {
                let senses = self.senses(first);
                self.kind_of_sense(senses[0])
            }
            SensePolicy::AnySense => {
                for base in &candidates {
                    for &sense in self.senses(base) {
                        let kind = self.kind_of_sense(sense)?;
                        if kind != CharacterKind::NotACharacter {
                            return Ok(kind);
                        }
                    }
                }
                Ok(CharacterKind::NotACharacter)
            }
        }
    }

    /// Render the lexicon back into `index.noun` / `data.noun` / `noun.exc`
    /// contents. Canonical form: constant lexicographer fields, all pointers
    /// written as plain hypernyms. Parsing the output reproduces the same
    /// synset and edge multisets.
    pub fn write_database(&self) -> DatabaseFiles {
        let mut data = String::new();
        for syn in self.synsets.values() {
            data.push_str(&format!("{} 03 n {:02x}", syn.offset, syn.lemmas.len()));
            for lemma in &syn.lemmas {
                data.push_str(&format!(" {lemma} 0"));
            }
            data.push_str(&format!(" {:03}", syn.hypernyms.len()));
            for hyp in &syn.hypernyms {
                data.push_str(&format!(" @ {hyp} n 0000"));
            }
            data.push_str(&format!(" | {}\n", syn.gloss));
        }
        let mut index = String::new();
        for (lemma, offsets) in &self.index {
            let n = offsets.len();
            index.push_str(&format!("{lemma} n {n} 0 {n} {n}"));
            for off in offsets {
                index.push_str(&format!(" {off}"));
            }
            index.push('\n');
        }
        let mut exc = String::new();
        for (form, bases) in &self.exceptions {
            exc.push_str(form);
            for base in bases {
                exc.push(' ');
                exc.push_str(base);
            }
            exc.push('\n');
        }
        DatabaseFiles {
            index_noun: index,
            data_noun: data,
            noun_exc: exc,
        }
    }
}

/// Textual contents of the three on-disk database files.
#[derive(Debug, Clone)]
pub struct DatabaseFiles {
    pub index_noun: String,
    pub data_noun: String,
    pub noun_exc: String,
}

impl DatabaseFiles {
    pub fn write_to(&self, dir: &Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("index.noun"), &self.index_noun)?;
        std::fs::write(dir.join("data.noun"), &self.data_noun)?;
        std::fs::write(dir.join("noun.exc"), &self.noun_exc)?;
        Ok(())
    }
}

/// Resolve the three noun database files under a WordNet root, accepting
/// both the root itself and the conventional `dict/` subdirectory.
pub fn database_paths(root: &Path) -> Result<(PathBuf, PathBuf, PathBuf), WordNetError> {
    for dir in [root.to_path_buf(), root.join("dict")] {
        let index = dir.join("index.noun");
        let data = dir.join("data.noun");
        let exc = dir.join("noun.exc");
        if index.is_file() && data.is_file() && exc.is_file() {
            return Ok((index, data, exc));
        }
    }
    Err(WordNetError::Io {
        path: root.join("index.noun"),
        source: std::io::Error::new(
            std::io::ErrorKind::NotFound,
            "index.noun/data.noun/noun.exc not found (also looked under dict/)",
        ),
    })
}

/// Load a lexicon from a WordNet root directory.
pub fn load_lexicon(root: &Path) -> Result<Lexicon, WordNetError> {
    let (index, data, exc) = database_paths(root)?;
    parse_database(&index, &data, &exc)
}

pub(crate) fn normalize_lemma(lemma: &str) -> String {
    lemma.to_lowercase().replace(' ', "_")
}
