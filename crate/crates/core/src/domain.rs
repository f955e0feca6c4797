//! Exact integer vectors and matrices, linear systems, and symbolic alphabets.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("vector must have at least one entry")]
    EmptyVector,
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("matrix must have at least one row and column")]
    EmptyMatrix,
    #[error("system matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("target has dimension {got}, expected {expected}")]
    TargetDim { expected: usize, got: usize },
    #[error("symbol `{0}` is already registered")]
    DuplicateSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
}

/// A vector of arbitrary-precision integers with at least one entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Result<Self, DomainError> {
        if entries.is_empty() {
            return Err(DomainError::EmptyVector);
        }
        Ok(IntVec(entries))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self, DomainError> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "zero-dimensional vector");
        IntVec(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    /// Sum of absolute values.
    pub fn norm1(&self) -> BigInt {
        self.0.iter().map(|e| e.abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative())
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        assert_eq!(self.dim(), other.dim());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        assert_eq!(self.dim(), other.dim());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|e| e * k).collect())
    }

    /// Restricts to the given coordinates, in the given order.
    pub fn project(&self, coords: &[usize]) -> IntVec {
        IntVec(coords.iter().map(|&i| self.0[i].clone()).collect())
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// 1-norm of a vector.
pub fn norm1_vec(v: &IntVec) -> BigInt {
    v.norm1()
}

/// 1-norm of a matrix, the sum of absolute values of all entries.
pub fn norm1_mat(m: &IntMatrix) -> BigInt {
    m.norm1()
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, DomainError> {
        if rows == 0 || cols == 0 {
            return Err(DomainError::EmptyMatrix);
        }
        if rows * cols != entries.len() {
            return Err(DomainError::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, DomainError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let entries: Vec<BigInt> = rows.iter().flatten().map(|&e| BigInt::from(e)).collect();
        if rows.iter().any(|row| row.len() != c) {
            return Err(DomainError::Shape {
                rows: r,
                cols: c,
                len: entries.len(),
            });
        }
        Self::new(r, c, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::from(1);
        }
        IntMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn norm1(&self) -> BigInt {
        self.entries.iter().map(|e| e.abs()).sum()
    }

    pub fn mul_vec(&self, x: &IntVec) -> IntVec {
        assert_eq!(self.cols, x.dim());
        IntVec(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(x.entries())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }

    /// `A·1_I`: the sum of the columns listed in `cols`.
    pub fn column_sum(&self, cols: &[usize]) -> IntVec {
        IntVec(
            (0..self.rows)
                .map(|i| cols.iter().map(|&j| self.get(i, j)).sum())
                .collect(),
        )
    }
}

/// `A x = c` with `A` square, unknowns ranging over the naturals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    a: IntMatrix,
    c: IntVec,
}

impl LinearSystem {
    pub fn new(a: IntMatrix, c: IntVec) -> Result<Self, DomainError> {
        if a.rows() != a.cols() {
            return Err(DomainError::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if c.dim() != a.rows() {
            return Err(DomainError::TargetDim {
                expected: a.rows(),
                got: c.dim(),
            });
        }
        Ok(LinearSystem { a, c })
    }

    pub fn from_i64s(a: &[Vec<i64>], c: &[i64]) -> Result<Self, DomainError> {
        Self::new(IntMatrix::from_rows(a)?, IntVec::from_i64s(c)?)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn target(&self) -> &IntVec {
        &self.c
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    /// `|c|₁ ≤ |A|₁`.
    pub fn is_normalized(&self) -> bool {
        self.c.norm1() <= self.a.norm1()
    }

    pub fn is_solution(&self, x: &IntVec) -> bool {
        x.dim() == self.dim() && x.is_nonnegative() && self.a.mul_vec(x) == self.c
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolKind {
    Constant,
    Variable,
    Marker,
}

/// Interned symbols in insertion order. Constants, variables and the
/// optional marker are pairwise disjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    kinds: Vec<SymbolKind>,
    lookup: HashMap<String, Symbol>,
    marker: Option<Symbol>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    fn register(&mut self, name: &str, kind: SymbolKind) -> Result<Symbol, DomainError> {
        if self.lookup.contains_key(name) {
            return Err(DomainError::DuplicateSymbol(name.to_string()));
        }
        let sym = Symbol(self.names.len() as u32);
        self.names.push(name.to_string());
        self.kinds.push(kind);
        self.lookup.insert(name.to_string(), sym);
        Ok(sym)
    }

    pub fn add_constant(&mut self, name: &str) -> Result<Symbol, DomainError> {
        self.register(name, SymbolKind::Constant)
    }

    pub fn add_variable(&mut self, name: &str) -> Result<Symbol, DomainError> {
        self.register(name, SymbolKind::Variable)
    }

    /// Registers the marker. At most one marker per alphabet.
    pub fn set_marker(&mut self, name: &str) -> Result<Symbol, DomainError> {
        if let Some(m) = self.marker {
            return Err(DomainError::DuplicateSymbol(self.name(m).to_string()));
        }
        let sym = self.register(name, SymbolKind::Marker)?;
        self.marker = Some(sym);
        Ok(sym)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, sym: Symbol) -> &str {
        &self.names[sym.index()]
    }

    pub fn kind(&self, sym: Symbol) -> SymbolKind {
        self.kinds[sym.index()]
    }

    pub fn marker(&self) -> Option<Symbol> {
        self.marker
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        sym.index() < self.names.len()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len() as u32).map(Symbol)
    }

    fn of_kind(&self, kind: SymbolKind) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols().filter(move |&s| self.kind(s) == kind)
    }

    pub fn constants(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.of_kind(SymbolKind::Constant)
    }

    pub fn variables(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.of_kind(SymbolKind::Variable)
    }

    /// Parses a word whose symbols are all single characters.
    pub fn parse_word(&self, text: &str) -> Result<Word, DomainError> {
        let mut buf = [0u8; 4];
        text.chars()
            .map(|ch| {
                let s: &str = ch.encode_utf8(&mut buf);
                self.symbol(s)
                    .ok_or_else(|| DomainError::UnknownSymbol(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn render(&self, word: &Word) -> String {
        word.0.iter().map(|&s| self.name(s)).collect()
    }
}

/// A finite sequence of symbols; interpretation is relative to an [`Alphabet`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

/// Shortlex key: shorter words first, then symbol order.
pub fn shortlex(w: &Word) -> (usize, &[Symbol]) {
    (w.len(), w.symbols())
}
