//! Rational sets of endomorphisms of a free monoid and the EDT0L languages
//! they generate.
//!
//! An [`EndoAutomaton`] is an NFA whose arcs carry endomorphisms of `C*`, each
//! letter mapped to a word of length at most two. Reading a path `h₁ … h_m`
//! (first arc applied first) yields `h_m(… h₁(seed) …)`; the language of an
//! [`Edt0lSystem`] is the set of all such words over accepting paths.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use crate::domain::{shortlex, Alphabet, DomainError, Symbol, Word};
use crate::lindio::AffineAutomaton;

/// Longest image allowed on an arc label.
pub const MAX_ARC_IMAGE: usize = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EndoError {
    #[error("endomorphisms are over different alphabets")]
    AlphabetMismatch,
    #[error("symbol index {0} is not in the alphabet")]
    UnknownSymbol(u32),
    #[error("endomorphism must give an image for each of the {expected} symbols, got {got}")]
    NotTotal { expected: usize, got: usize },
    #[error(
        "arc label maps `{symbol}` to a word of length {len}, at most {MAX_ARC_IMAGE} allowed"
    )]
    NotAdmissible { symbol: String, len: usize },
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("alphabet has no marker symbol")]
    NoMarker,
    #[error("word `{word}` has {got} markers, expected {expected}")]
    TupleArity {
        word: String,
        expected: usize,
        got: usize,
    },
    #[error("affine automaton cannot be translated to a unary system: {0}")]
    NotUnary(String),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// An endomorphism of `C*`, given by the image of every letter.
#[derive(Clone, Debug)]
pub struct Endomorphism {
    alphabet: Arc<Alphabet>,
    images: Vec<Word>,
}

impl PartialEq for Endomorphism {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.images == other.images
    }
}

impl Eq for Endomorphism {}

fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_word(alphabet: &Alphabet, w: &Word) -> Result<(), EndoError> {
    match w.symbols().iter().find(|&&s| !alphabet.contains(s)) {
        Some(s) => Err(EndoError::UnknownSymbol(s.0)),
        None => Ok(()),
    }
}

impl Endomorphism {
    pub fn identity(alphabet: Arc<Alphabet>) -> Self {
        let images = alphabet.symbols().map(|s| Word(vec![s])).collect();
        Endomorphism { alphabet, images }
    }

    /// Images listed by symbol index; must cover the whole alphabet.
    pub fn from_images(alphabet: Arc<Alphabet>, images: Vec<Word>) -> Result<Self, EndoError> {
        if images.len() != alphabet.len() {
            return Err(EndoError::NotTotal {
                expected: alphabet.len(),
                got: images.len(),
            });
        }
        for w in &images {
            check_word(&alphabet, w)?;
        }
        Ok(Endomorphism { alphabet, images })
    }

    /// Identity except on the listed letters.
    pub fn with_images(
        alphabet: Arc<Alphabet>,
        pairs: impl IntoIterator<Item = (Symbol, Word)>,
    ) -> Result<Self, EndoError> {
        let mut h = Self::identity(alphabet);
        for (s, w) in pairs {
            if !h.alphabet.contains(s) {
                return Err(EndoError::UnknownSymbol(s.0));
            }
            check_word(&h.alphabet, &w)?;
            h.images[s.index()] = w;
        }
        Ok(h)
    }

    /// Parses `letter -> image` pairs written with single-character symbols.
    pub fn parse(alphabet: Arc<Alphabet>, pairs: &[(&str, &str)]) -> Result<Self, EndoError> {
        let parsed = pairs
            .iter()
            .map(|&(from, to)| {
                let s = alphabet
                    .symbol(from)
                    .ok_or_else(|| DomainError::UnknownSymbol(from.to_string()))?;
                Ok((s, alphabet.parse_word(to)?))
            })
            .collect::<Result<Vec<_>, EndoError>>()?;
        Self::with_images(alphabet, parsed)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn image(&self, s: Symbol) -> &Word {
        &self.images[s.index()]
    }

    pub fn apply(&self, w: &Word) -> Result<Word, EndoError> {
        let mut out = Vec::with_capacity(w.len());
        for &s in w.symbols() {
            let img = self
                .images
                .get(s.index())
                .ok_or(EndoError::UnknownSymbol(s.0))?;
            out.extend_from_slice(img.symbols());
        }
        Ok(Word(out))
    }

    /// `self ∘ g`, i.e. `g` first.
    pub fn compose(&self, g: &Endomorphism) -> Result<Endomorphism, EndoError> {
        if !same_alphabet(&self.alphabet, &g.alphabet) {
            return Err(EndoError::AlphabetMismatch);
        }
        let images = g
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<_, _>>()?;
        Ok(Endomorphism {
            alphabet: self.alphabet.clone(),
            images,
        })
    }

    pub fn is_arc_admissible(&self) -> bool {
        self.images.iter().all(|w| w.len() <= MAX_ARC_IMAGE)
    }

    /// Some letter maps to the empty word.
    pub fn is_erasing(&self) -> bool {
        self.images.iter().any(Word::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.symbols() == [Symbol(i as u32)])
    }

    /// Non-identity letter images, e.g. `#->a#, a->aa`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .alphabet
            .symbols()
            .filter(|&s| self.images[s.index()].symbols() != [s])
            .map(|s| {
                let img = &self.images[s.index()];
                let rendered = if img.is_empty() {
                    "ε".to_string()
                } else {
                    self.alphabet.render(img)
                };
                format!("{}->{}", self.alphabet.name(s), rendered)
            })
            .collect();
        if parts.is_empty() {
            "id".to_string()
        } else {
            parts.join(", ")
        }
    }
}

pub fn compose(f: &Endomorphism, g: &Endomorphism) -> Result<Endomorphism, EndoError> {
    f.compose(g)
}

pub fn apply(h: &Endomorphism, w: &Word) -> Result<Word, EndoError> {
    h.apply(w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoArc {
    pub from: usize,
    pub to: usize,
    pub label: Endomorphism,
}

/// NFA over arc-admissible endomorphisms. States are identified by strings and
/// kept in identifier order.
#[derive(Clone, Debug)]
pub struct EndoAutomaton {
    alphabet: Arc<Alphabet>,
    states: Vec<String>,
    initial: usize,
    finals: BTreeSet<usize>,
    arcs: Vec<EndoArc>,
}

impl EndoAutomaton {
    pub fn new(
        alphabet: Arc<Alphabet>,
        states: Vec<String>,
        initial: &str,
        finals: &[String],
        arcs: Vec<(String, String, Endomorphism)>,
    ) -> Result<Self, EndoError> {
        let mut sorted = states;
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(EndoError::DuplicateState(w[0].clone()));
        }
        let index = |id: &str| {
            sorted
                .binary_search_by(|s| s.as_str().cmp(id))
                .map_err(|_| EndoError::UnknownState(id.to_string()))
        };
        let initial = index(initial)?;
        let finals = finals
            .iter()
            .map(|f| index(f))
            .collect::<Result<BTreeSet<_>, _>>()?;
        let mut built = Vec::with_capacity(arcs.len());
        for (from, to, label) in arcs {
            if !same_alphabet(&alphabet, &label.alphabet) {
                return Err(EndoError::AlphabetMismatch);
            }
            if let Some(s) = label
                .alphabet
                .symbols()
                .find(|&s| label.image(s).len() > MAX_ARC_IMAGE)
            {
                return Err(EndoError::NotAdmissible {
                    symbol: alphabet.name(s).to_string(),
                    len: label.image(s).len(),
                });
            }
            built.push(EndoArc {
                from: index(&from)?,
                to: index(&to)?,
                label,
            });
        }
        built.sort_by_key(|a| (a.from, a.to));
        Ok(EndoAutomaton {
            alphabet,
            states: sorted,
            initial,
            finals,
            arcs: built,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn arcs(&self) -> &[EndoArc] {
        &self.arcs
    }

    fn forward(&self, from: impl IntoIterator<Item = usize>) -> Vec<bool> {
        self.closure(from, |a| (a.from, a.to))
    }

    fn backward(&self, from: impl IntoIterator<Item = usize>) -> Vec<bool> {
        self.closure(from, |a| (a.to, a.from))
    }

    fn closure(
        &self,
        from: impl IntoIterator<Item = usize>,
        dir: impl Fn(&EndoArc) -> (usize, usize),
    ) -> Vec<bool> {
        let mut seen = vec![false; self.states.len()];
        let mut stack: Vec<usize> = from.into_iter().collect();
        for &s in &stack {
            seen[s] = true;
        }
        while let Some(s) = stack.pop() {
            for arc in &self.arcs {
                let (src, dst) = dir(arc);
                if src == s && !seen[dst] {
                    seen[dst] = true;
                    stack.push(dst);
                }
            }
        }
        seen
    }

    /// Some final state is reachable from the initial state.
    pub fn accepts_something(&self) -> bool {
        let reach = self.forward([self.initial]);
        self.finals.iter().any(|&f| reach[f])
    }

    /// Every remaining state lies on an accepting path. When nothing is
    /// accepted the result is the bare initial state with no finals.
    pub fn trim(&self) -> EndoAutomaton {
        let reach = self.forward([self.initial]);
        let coreach = self.backward(self.finals.iter().copied());
        let useful: Vec<bool> = reach.iter().zip(&coreach).map(|(a, b)| *a && *b).collect();
        if !useful[self.initial] {
            return EndoAutomaton {
                alphabet: self.alphabet.clone(),
                states: vec![self.states[self.initial].clone()],
                initial: 0,
                finals: BTreeSet::new(),
                arcs: Vec::new(),
            };
        }
        let mut remap = vec![usize::MAX; self.states.len()];
        let mut states = Vec::new();
        for (i, s) in self.states.iter().enumerate() {
            if useful[i] {
                remap[i] = states.len();
                states.push(s.clone());
            }
        }
        EndoAutomaton {
            alphabet: self.alphabet.clone(),
            states,
            initial: remap[self.initial],
            finals: self
                .finals
                .iter()
                .filter(|&&f| useful[f])
                .map(|&f| remap[f])
                .collect(),
            arcs: self
                .arcs
                .iter()
                .filter(|a| useful[a.from] && useful[a.to])
                .map(|a| EndoArc {
                    from: remap[a.from],
                    to: remap[a.to],
                    label: a.label.clone(),
                })
                .collect(),
        }
    }

    pub fn is_trim(&self) -> bool {
        let t = self.trim();
        t.states.len() == self.states.len() && !self.finals.is_empty()
    }

    /// Directed cycle among all states (self-loops included).
    pub fn has_cycle(&self) -> bool {
        // Kahn's algorithm: a cycle remains iff some state is never freed.
        let mut indegree = vec![0usize; self.states.len()];
        for a in &self.arcs {
            indegree[a.to] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.states.len())
            .filter(|&s| indegree[s] == 0)
            .collect();
        let mut removed = 0;
        while let Some(s) = queue.pop_front() {
            removed += 1;
            for a in self.arcs.iter().filter(|a| a.from == s) {
                indegree[a.to] -= 1;
                if indegree[a.to] == 0 {
                    queue.push_back(a.to);
                }
            }
        }
        removed < self.states.len()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from(
            "digraph edt0l {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n",
        );
        for (i, id) in self.states.iter().enumerate() {
            let shape = if self.finals.contains(&i) {
                ", shape=doublecircle"
            } else {
                ""
            };
            let _ = writeln!(s, "  s{i} [label=\"{}\"{shape}];", escape(id));
        }
        let _ = writeln!(s, "  start -> s{};", self.initial);
        for a in &self.arcs {
            let _ = writeln!(
                s,
                "  s{} -> s{} [label=\"{}\"];",
                a.from,
                a.to,
                escape(&a.label.describe())
            );
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The words `h(seed)` for `h` ranging over the accepted compositions.
#[derive(Clone, Debug)]
pub struct Edt0lSystem {
    automaton: EndoAutomaton,
    seed: Word,
    tuple_arity: Option<usize>,
}

/// Result of a bounded enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Shortlex order.
    pub words: Vec<Word>,
    /// Exploration stopped at the depth cap with arcs left to follow. Only
    /// set when some label is erasing.
    pub truncated: bool,
}

impl Edt0lSystem {
    /// With `seed = None` the seed is the marker.
    pub fn new(
        automaton: EndoAutomaton,
        seed: Option<Word>,
        tuple_arity: Option<usize>,
    ) -> Result<Self, EndoError> {
        let seed = match seed {
            Some(w) => w,
            None => Word(vec![automaton
                .alphabet
                .marker()
                .ok_or(EndoError::NoMarker)?]),
        };
        check_word(&automaton.alphabet, &seed)?;
        if tuple_arity.is_some() && automaton.alphabet.marker().is_none() {
            return Err(EndoError::NoMarker);
        }
        Ok(Edt0lSystem {
            automaton,
            seed,
            tuple_arity,
        })
    }

    pub fn automaton(&self) -> &EndoAutomaton {
        &self.automaton
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.automaton.alphabet
    }

    pub fn seed(&self) -> &Word {
        &self.seed
    }

    pub fn tuple_arity(&self) -> Option<usize> {
        self.tuple_arity
    }

    pub fn render(&self, w: &Word) -> String {
        self.alphabet().render(w)
    }

    pub fn is_empty(&self) -> bool {
        !self.automaton.accepts_something()
    }

    /// Infinitely many accepted compositions: the trimmed automaton has a
    /// cycle. Distinct compositions may still produce the same word, so this
    /// does not by itself bound the number of words.
    pub fn is_language_infinite(&self) -> bool {
        self.automaton.trim().has_cycle()
    }

    /// All `h(seed)` of length at most `length_cap`.
    ///
    /// Without erasing labels, words never shrink along a path and exploration
    /// prunes on length. Otherwise paths are cut at `depth_cap` arcs and
    /// [`Enumeration::truncated`] reports whether anything was cut.
    pub fn enumerate(&self, length_cap: usize, depth_cap: usize) -> Result<Enumeration, EndoError> {
        let aut = self.automaton.trim();
        let erasing = aut.arcs.iter().any(|a| a.label.is_erasing());
        let mut out_arcs = vec![Vec::new(); aut.states.len()];
        for a in &aut.arcs {
            out_arcs[a.from].push(a);
        }

        let mut found: BTreeSet<Word> = BTreeSet::new();
        let mut truncated = false;
        let mut seen: HashSet<(usize, Word)> = HashSet::new();
        let mut queue: VecDeque<(usize, Word, usize)> = VecDeque::new();
        if aut.finals.is_empty() || (!erasing && self.seed.len() > length_cap) {
            return Ok(Enumeration {
                words: Vec::new(),
                truncated: false,
            });
        }
        seen.insert((aut.initial, self.seed.clone()));
        queue.push_back((aut.initial, self.seed.clone(), 0));
        while let Some((state, word, depth)) = queue.pop_front() {
            if aut.finals.contains(&state) && word.len() <= length_cap {
                found.insert(word.clone());
            }
            if out_arcs[state].is_empty() {
                continue;
            }
            if erasing && depth >= depth_cap {
                truncated = true;
                continue;
            }
            for arc in &out_arcs[state] {
                let next = arc.label.apply(&word)?;
                if !erasing && next.len() > length_cap {
                    continue;
                }
                let key = (arc.to, next);
                if !seen.contains(&key) {
                    seen.insert(key.clone());
                    queue.push_back((key.0, key.1, depth + 1));
                }
            }
        }

        let mut words: Vec<Word> = found.into_iter().collect();
        words.sort_by(|a, b| shortlex(a).cmp(&shortlex(b)));
        if let (Some(k), Some(marker)) = (self.tuple_arity, self.alphabet().marker()) {
            for w in &words {
                let got = w.symbols().iter().filter(|&&s| s == marker).count();
                if got + 1 != k {
                    return Err(EndoError::TupleArity {
                        word: self.render(w),
                        expected: k.saturating_sub(1),
                        got,
                    });
                }
            }
        }
        Ok(Enumeration { words, truncated })
    }

    /// Parses the JSON exchange format. Symbols are single characters; letters
    /// missing from an arc's `map` are fixed.
    pub fn from_json(text: &str) -> Result<Self, EndoError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: SystemJson = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            EndoError::Schema {
                path: if path.is_empty() {
                    "$".to_string()
                } else {
                    path
                },
                message: e.inner().to_string(),
            }
        })?;
        raw.build()
    }
}

pub fn edt0l_enumerate(
    sys: &Edt0lSystem,
    length_cap: usize,
    depth_cap: usize,
) -> Result<Enumeration, EndoError> {
    sys.enumerate(length_cap, depth_cap)
}

pub fn edt0l_is_empty(sys: &Edt0lSystem) -> bool {
    sys.is_empty()
}

pub fn edt0l_is_language_infinite(sys: &Edt0lSystem) -> bool {
    sys.is_language_infinite()
}

/// Splits at every marker, keeping empty fields: `k` markers give `k + 1`
/// fields.
pub fn split_tuple(w: &Word, marker: Symbol) -> Vec<Word> {
    w.symbols()
        .split(|&s| s == marker)
        .map(|field| Word(field.to_vec()))
        .collect()
}

pub fn join_tuple(fields: &[Word], marker: Symbol) -> Word {
    let mut out = Vec::new();
    for (i, f) in fields.iter().enumerate() {
        if i > 0 {
            out.push(marker);
        }
        out.extend_from_slice(f.symbols());
    }
    Word(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemJson {
    alphabet: Vec<String>,
    marker: String,
    states: Vec<String>,
    initial: String,
    finals: Vec<String>,
    arcs: Vec<ArcJson>,
    #[serde(default)]
    seed: Option<String>,
    #[serde(default)]
    tuple_arity: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcJson {
    from: String,
    to: String,
    map: BTreeMap<String, String>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> EndoError {
    EndoError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

impl SystemJson {
    fn build(self) -> Result<Edt0lSystem, EndoError> {
        let single = |path: String, s: &str| {
            if s.chars().count() == 1 {
                Ok(())
            } else {
                Err(schema(
                    path,
                    format!("symbol `{s}` must be a single character"),
                ))
            }
        };
        let mut alphabet = Alphabet::new();
        for (i, sym) in self.alphabet.iter().enumerate() {
            single(format!("alphabet[{i}]"), sym)?;
            if *sym == self.marker {
                continue;
            }
            alphabet
                .add_constant(sym)
                .map_err(|e| schema(format!("alphabet[{i}]"), e.to_string()))?;
        }
        single("marker".to_string(), &self.marker)?;
        alphabet
            .set_marker(&self.marker)
            .map_err(|e| schema("marker", e.to_string()))?;
        let alphabet = Arc::new(alphabet);

        let word = |path: String, text: &str| {
            alphabet
                .parse_word(text)
                .map_err(|e| schema(path, e.to_string()))
        };
        let known = |path: String, id: &str| {
            if self.states.iter().any(|s| s == id) {
                Ok(())
            } else {
                Err(schema(path, format!("unknown state `{id}`")))
            }
        };
        known("initial".to_string(), &self.initial)?;
        for (i, f) in self.finals.iter().enumerate() {
            known(format!("finals[{i}]"), f)?;
        }

        let mut arcs = Vec::with_capacity(self.arcs.len());
        for (i, arc) in self.arcs.iter().enumerate() {
            known(format!("arcs[{i}].from"), &arc.from)?;
            known(format!("arcs[{i}].to"), &arc.to)?;
            let mut pairs = Vec::new();
            for (sym, image) in &arc.map {
                let path = format!("arcs[{i}].map.{sym}");
                let s = alphabet
                    .symbol(sym)
                    .ok_or_else(|| schema(path.clone(), format!("unknown symbol `{sym}`")))?;
                let w = word(path.clone(), image)?;
                if w.len() > MAX_ARC_IMAGE {
                    return Err(schema(
                        path,
                        format!("image `{image}` longer than {MAX_ARC_IMAGE} symbols"),
                    ));
                }
                pairs.push((s, w));
            }
            let label = Endomorphism::with_images(alphabet.clone(), pairs)?;
            arcs.push((arc.from.clone(), arc.to.clone(), label));
        }
        let seed = self
            .seed
            .as_deref()
            .map(|s| word("seed".to_string(), s))
            .transpose()?;
        if self.tuple_arity == Some(0) {
            return Err(schema("tuple_arity", "must be at least 1"));
        }
        let automaton =
            EndoAutomaton::new(alphabet, self.states, &self.initial, &self.finals, arcs)
                .map_err(|e| schema("states", e.to_string()))?;
        Edt0lSystem::new(automaton, seed, self.tuple_arity)
    }
}

/// Re-encodes a solution automaton of a one-variable system (or one whose
/// add arcs only touch `coord`) over the unary alphabet `{a}` with marker
/// `#`: the value `x` is carried as `aˣ#`, `x ↦ x + 1` becomes `# ↦ a#`,
/// `x ↦ 2x` becomes `a ↦ aa`, and a final arc `# ↦ ε` leads to the sole
/// accepting state. Word lengths of the language are then the solution values.
pub fn from_unary_affine(aut: &AffineAutomaton, coord: usize) -> Result<Edt0lSystem, EndoError> {
    let mut alphabet = Alphabet::new();
    let a = alphabet.add_constant("a")?;
    let hash = alphabet.set_marker("#")?;
    let alphabet = Arc::new(alphabet);
    let accept = "accept".to_string();

    let (Some(_), Some(final_state)) = (aut.initial(), aut.accepting()) else {
        let automaton =
            EndoAutomaton::new(alphabet, vec![accept.clone()], &accept, &[], Vec::new())?;
        return Edt0lSystem::new(automaton, None, None);
    };
    let name = |i: usize| format!("q{i}");
    let add = Endomorphism::with_images(alphabet.clone(), [(hash, Word(vec![a, hash]))])?;
    let double = Endomorphism::with_images(alphabet.clone(), [(a, Word(vec![a, a]))])?;
    let erase = Endomorphism::with_images(alphabet.clone(), [(hash, Word::empty())])?;

    let mut arcs = Vec::with_capacity(aut.arcs().len() + 1);
    for arc in aut.arcs() {
        let label = if arc.map.is_double() {
            double.clone()
        } else if arc.map.add_set() == [coord] {
            add.clone()
        } else {
            return Err(EndoError::NotUnary(format!(
                "arc {} -> {} adds {}",
                aut.states()[arc.source],
                aut.states()[arc.target],
                arc.map.label()
            )));
        };
        arcs.push((name(arc.source), name(arc.target), label));
    }
    arcs.push((name(final_state), accept.clone(), erase));
    let mut states: Vec<String> = (0..aut.states().len()).map(name).collect();
    states.push(accept.clone());
    let initial = name(aut.initial().expect("checked above"));
    let automaton = EndoAutomaton::new(alphabet, states, &initial, &[accept], arcs)?;
    Edt0lSystem::new(automaton, None, None)
}
