//! Word equations `U = V`: parsing, bounded search, and the reduction to a
//! polynomial system through the free monoid generated by
//! `a ↦ [[1,0],[1,1]]` and `b ↦ [[1,1],[0,1]]` inside `SL(2,ℤ)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::domain::{shortlex, Alphabet, Symbol, SymbolKind, Word};
use crate::poly::{PolyError, Polynomial, PolynomialSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordEqError {
    #[error("malformed equation: {0}")]
    Parse(String),
    #[error("symbol `{0}` is not a generator; only `a` and `b` have matrices")]
    NotGenerator(char),
    #[error("matrix is not a product of the generators: {0}")]
    NotInMonoid(String),
    #[error("the matrix encoding supports the constants a and b only, found `{0}`")]
    UnsupportedConstant(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `U = V` over lowercase constants and uppercase variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordEquation {
    alphabet: Alphabet,
    lhs: Word,
    rhs: Word,
}

impl WordEquation {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    /// `|U| + |V|`.
    pub fn length(&self) -> usize {
        self.lhs.len() + self.rhs.len()
    }

    pub fn constants(&self) -> Vec<Symbol> {
        self.alphabet.constants().collect()
    }

    pub fn variables(&self) -> Vec<Symbol> {
        self.alphabet.variables().collect()
    }

    pub fn is_solution(&self, sigma: &Substitution) -> bool {
        sigma.apply(&self.lhs) == sigma.apply(&self.rhs)
    }
}

impl fmt::Display for WordEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}={}",
            self.alphabet.render(&self.lhs),
            self.alphabet.render(&self.rhs)
        )
    }
}

/// Reads `<word>=<word>`; lowercase ASCII letters are constants, uppercase
/// ASCII letters variables. Symbols are registered in order of appearance.
pub fn parse_equation(text: &str) -> Result<WordEquation, WordEqError> {
    let text = text.trim();
    let mut sides = text.split('=');
    let (Some(lhs), Some(rhs), None) = (sides.next(), sides.next(), sides.next()) else {
        return Err(WordEqError::Parse(if text.contains('=') {
            "more than one `=`".to_string()
        } else {
            "missing `=`".to_string()
        }));
    };
    let mut alphabet = Alphabet::new();
    let mut side = |s: &str| -> Result<Word, WordEqError> {
        let mut w = Vec::with_capacity(s.len());
        for ch in s.chars() {
            let name = ch.to_string();
            let sym = match alphabet.symbol(&name) {
                Some(sym) => sym,
                None if ch.is_ascii_lowercase() => alphabet.add_constant(&name).expect("fresh"),
                None if ch.is_ascii_uppercase() => alphabet.add_variable(&name).expect("fresh"),
                None => return Err(WordEqError::Parse(format!("illegal character `{ch}`"))),
            };
            w.push(sym);
        }
        Ok(Word(w))
    };
    let lhs = side(lhs)?;
    let rhs = side(rhs)?;
    Ok(WordEquation { alphabet, lhs, rhs })
}

/// Images of variables as constant words; other symbols are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    images: BTreeMap<Symbol, Word>,
}

impl Substitution {
    pub fn new(images: BTreeMap<Symbol, Word>) -> Self {
        Substitution { images }
    }

    pub fn image(&self, var: Symbol) -> Option<&Word> {
        self.images.get(&var)
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::new();
        for &s in w.symbols() {
            match self.images.get(&s) {
                Some(img) => out.extend_from_slice(img.symbols()),
                None => out.push(s),
            }
        }
        Word(out)
    }

    /// `X=a, Y=ab`, with `ε` for the empty word.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.images
            .iter()
            .map(|(&v, w)| {
                let img = if w.is_empty() {
                    "ε".to_string()
                } else {
                    alphabet.render(w)
                };
                format!("{}={}", alphabet.name(v), img)
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// All words over `letters` of length at most `cap`, shortlex.
fn words_up_to(letters: &[Symbol], cap: usize) -> Vec<Word> {
    let mut all = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    if letters.is_empty() {
        return all;
    }
    for _ in 0..cap {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &l in letters {
                let mut v = w.symbols().to_vec();
                v.push(l);
                next.push(Word(v));
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| shortlex(a).cmp(&shortlex(b)));
    all
}

/// Every substitution with image lengths at most `len_cap` solving `eq`.
/// Ordered by the shortlex position of each variable's image, first variable
/// most significant.
pub fn brute_force_wordeq(eq: &WordEquation, len_cap: usize) -> Vec<Substitution> {
    let vars = eq.variables();
    let candidates = words_up_to(&eq.constants(), len_cap);
    let mut idx = vec![0usize; vars.len()];
    let mut found = Vec::new();
    loop {
        let sigma = Substitution::new(
            vars.iter()
                .zip(&idx)
                .map(|(&v, &i)| (v, candidates[i].clone()))
                .collect(),
        );
        if eq.is_solution(&sigma) {
            found.push(sigma);
        }
        let mut k = vars.len();
        loop {
            if k == 0 {
                return found;
            }
            k -= 1;
            if idx[k] + 1 < candidates.len() {
                idx[k] += 1;
                break;
            }
            idx[k] = 0;
        }
    }
}

/// A 2×2 integer matrix `[[m11, m12], [m21, m22]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub m11: BigInt,
    pub m12: BigInt,
    pub m21: BigInt,
    pub m22: BigInt,
}

impl Mat2 {
    pub fn new(
        m11: impl Into<BigInt>,
        m12: impl Into<BigInt>,
        m21: impl Into<BigInt>,
        m22: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            m11: m11.into(),
            m12: m12.into(),
            m21: m21.into(),
            m22: m22.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// Image of `a`.
    pub fn gen_a() -> Self {
        Mat2::new(1, 0, 1, 1)
    }

    /// Image of `b`.
    pub fn gen_b() -> Self {
        Mat2::new(1, 1, 0, 1)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            m11: &self.m11 * &o.m11 + &self.m12 * &o.m21,
            m12: &self.m11 * &o.m12 + &self.m12 * &o.m22,
            m21: &self.m21 * &o.m11 + &self.m22 * &o.m21,
            m22: &self.m21 * &o.m12 + &self.m22 * &o.m22,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().iter().all(|e| !e.is_negative())
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.m11, self.m12, self.m21, self.m22
        )
    }
}

/// Product of generator matrices in word order.
pub fn matrix_of_word(w: &str) -> Result<Mat2, WordEqError> {
    w.chars().try_fold(Mat2::identity(), |m, ch| match ch {
        'a' => Ok(m.mul(&Mat2::gen_a())),
        'b' => Ok(m.mul(&Mat2::gen_b())),
        other => Err(WordEqError::NotGenerator(other)),
    })
}

/// Recovers the word of a non-negative determinant-one matrix by peeling the
/// leftmost generator: `a` when the second row dominates the first, `b` when
/// the first dominates the second.
pub fn decode_matrix(m: &Mat2) -> Result<String, WordEqError> {
    if !m.is_nonnegative() || !m.det().is_one() {
        return Err(WordEqError::NotInMonoid(format!(
            "{m} needs non-negative entries and determinant 1"
        )));
    }
    let mut cur = m.clone();
    let mut word = String::new();
    while cur != Mat2::identity() {
        if cur.m21 >= cur.m11 && cur.m22 >= cur.m12 {
            cur.m21 -= &cur.m11;
            cur.m22 -= &cur.m12;
            word.push('a');
        } else if cur.m11 >= cur.m21 && cur.m12 >= cur.m22 {
            cur.m11 -= &cur.m21;
            cur.m12 -= &cur.m22;
            word.push('b');
        } else {
            return Err(WordEqError::NotInMonoid(format!("stalled at {cur}")));
        }
    }
    Ok(word)
}

/// 2×2 matrix of polynomials, row-major.
#[derive(Clone)]
struct PolyMat([Polynomial; 4]);

impl PolyMat {
    fn constant(m: &Mat2) -> Self {
        PolyMat(m.entries().map(|e| Polynomial::constant(e.clone())))
    }

    fn unknowns(first: usize) -> Self {
        PolyMat([0, 1, 2, 3].map(|k| Polynomial::var(first + k)))
    }

    fn mul(&self, o: &PolyMat) -> PolyMat {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &o.0;
        PolyMat([
            a.mul(e).add(&b.mul(g)),
            a.mul(f).add(&b.mul(h)),
            c.mul(e).add(&d.mul(g)),
            c.mul(f).add(&d.mul(h)),
        ])
    }
}

/// Names of the four entry unknowns of variable `name`: `X1 X2 / X3 X4`.
pub fn entry_names(name: &str) -> [String; 4] {
    [1, 2, 3, 4].map(|k| format!("{name}{k}"))
}

/// Replaces each variable by an unknown 2×2 matrix and each constant by its
/// generator, equates both products entrywise, and requires every variable
/// matrix to have determinant 1 and non-negative entries.
pub fn encode_equation(eq: &WordEquation) -> Result<PolynomialSystem, WordEqError> {
    let al = eq.alphabet();
    for c in eq.constants() {
        let name = al.name(c);
        if name != "a" && name != "b" {
            return Err(WordEqError::UnsupportedConstant(name.to_string()));
        }
    }
    let vars = eq.variables();
    let first: BTreeMap<Symbol, usize> =
        vars.iter().enumerate().map(|(i, &v)| (v, 4 * i)).collect();
    let unknowns: Vec<String> = vars.iter().flat_map(|&v| entry_names(al.name(v))).collect();

    let side = |w: &Word| -> PolyMat {
        w.symbols()
            .iter()
            .fold(PolyMat::constant(&Mat2::identity()), |acc, &s| {
                let factor = match al.kind(s) {
                    SymbolKind::Variable => PolyMat::unknowns(first[&s]),
                    _ if al.name(s) == "a" => PolyMat::constant(&Mat2::gen_a()),
                    _ => PolyMat::constant(&Mat2::gen_b()),
                };
                acc.mul(&factor)
            })
    };
    let (left, right) = (side(eq.lhs()), side(eq.rhs()));
    let mut equations: Vec<Polynomial> =
        left.0.iter().zip(&right.0).map(|(l, r)| l.sub(r)).collect();
    for &v in &vars {
        let [x1, x2, x3, x4] = PolyMat::unknowns(first[&v]).0;
        equations.push(x1.mul(&x4).sub(&x2.mul(&x3)).sub(&Polynomial::constant(1)));
    }
    let nonneg = (0..unknowns.len()).collect();
    Ok(PolynomialSystem::new(unknowns, equations, nonneg)?)
}

/// The matrix entries of each `σ(X)` as an assignment to the encoded unknowns.
pub fn assignment_of(
    eq: &WordEquation,
    sigma: &Substitution,
) -> Result<BTreeMap<String, BigInt>, WordEqError> {
    let al = eq.alphabet();
    let mut out = BTreeMap::new();
    for v in eq.variables() {
        let img = sigma.image(v).map(|w| al.render(w)).unwrap_or_default();
        let m = matrix_of_word(&img)?;
        for (name, e) in entry_names(al.name(v)).into_iter().zip(m.entries()) {
            out.insert(name, e.clone());
        }
    }
    Ok(out)
}

/// Decodes each variable's entry matrix back to a word.
pub fn substitution_of(
    eq: &WordEquation,
    assignment: &BTreeMap<String, BigInt>,
) -> Result<Substitution, WordEqError> {
    let al = eq.alphabet();
    let mut images = BTreeMap::new();
    for v in eq.variables() {
        let names = entry_names(al.name(v));
        let get = |k: usize| {
            assignment
                .get(&names[k])
                .cloned()
                .ok_or_else(|| PolyError::MissingUnknown(names[k].clone()))
        };
        let m = Mat2 {
            m11: get(0)?,
            m12: get(1)?,
            m21: get(2)?,
            m22: get(3)?,
        };
        let text = decode_matrix(&m)?;
        let word = al.parse_word(&text).map_err(|_| {
            WordEqError::NotInMonoid(format!(
                "{m} decodes to `{text}`, outside the equation's constants"
            ))
        })?;
        images.insert(v, word);
    }
    Ok(Substitution::new(images))
}

/// Lexicographically largest `(s1, s2, s3, s4)` with `s1 ≥ s2 ≥ s3 ≥ s4 ≥ 0`
/// and `s1² + s2² + s3² + s4² = m`.
pub fn four_squares(m: u64) -> [u64; 4] {
    for s1 in (0..=m.isqrt()).rev() {
        let r1 = m - s1 * s1;
        for s2 in (0..=s1.min(r1.isqrt())).rev() {
            let r2 = r1 - s2 * s2;
            for s3 in (0..=s2.min(r2.isqrt())).rev() {
                let r3 = r2 - s3 * s3;
                let s4 = r3.isqrt();
                if s4 <= s3 && s4 * s4 == r3 {
                    return [s1, s2, s3, s4];
                }
            }
        }
    }
    unreachable!("every natural number is a sum of four squares")
}

/// Folds a system into one equation without sign constraints: each
/// non-negative unknown `x` becomes `x_s1² + x_s2² + x_s3² + x_s4²` and the
/// equations `p₁ = 0, …, p_m = 0` become `p₁² + … + p_m² = 0`.
pub fn to_single_equation(ps: &PolynomialSystem) -> PolynomialSystem {
    let taken: BTreeSet<&str> = ps.unknowns().iter().map(String::as_str).collect();
    let fresh = |base: String| {
        let mut name = base;
        while taken.contains(name.as_str()) {
            name.push('\'');
        }
        name
    };
    let mut unknowns = Vec::new();
    let mut images = Vec::with_capacity(ps.unknowns().len());
    for (i, name) in ps.unknowns().iter().enumerate() {
        if ps.nonneg().contains(&i) {
            let mut sum = Polynomial::zero();
            for k in 1..=4 {
                unknowns.push(fresh(format!("{name}_s{k}")));
                let s = Polynomial::var(unknowns.len() - 1);
                sum = sum.add(&s.mul(&s));
            }
            images.push(sum);
        } else {
            unknowns.push(name.clone());
            images.push(Polynomial::var(unknowns.len() - 1));
        }
    }
    let combined = ps.equations().iter().fold(Polynomial::zero(), |acc, p| {
        let q = p.substitute(&images);
        acc.add(&q.mul(&q))
    });
    PolynomialSystem::new(unknowns, vec![combined], BTreeSet::new())
        .expect("fresh unknowns declared")
}

/// Searches `[-bound, bound]` for every unknown, or `[0, bound]` for the
/// non-negative ones.
pub fn bounded_satisfiable(ps: &PolynomialSystem, bound: u64) -> Option<Vec<BigInt>> {
    let n = ps.unknowns().len();
    let lo = |i: usize| {
        if ps.nonneg().contains(&i) {
            BigInt::zero()
        } else {
            -BigInt::from(bound)
        }
    };
    let hi = BigInt::from(bound);
    let mut vals: Vec<BigInt> = (0..n).map(lo).collect();
    loop {
        if ps.is_satisfied_by(&vals) {
            return Some(vals);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if vals[i] < hi {
                vals[i] += 1;
                break;
            }
            vals[i] = lo(i);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solutions(eq: &str, cap: usize) -> Vec<String> {
        let eq = parse_equation(eq).unwrap();
        brute_force_wordeq(&eq, cap)
            .iter()
            .map(|s| s.render(eq.alphabet()))
            .collect()
    }

    fn asg(pairs: &[(&str, i64)]) -> BTreeMap<String, BigInt> {
        pairs
            .iter()
            .map(|&(k, v)| (k.to_string(), BigInt::from(v)))
            .collect()
    }

    #[test]
    fn parse_examples() {
        let eq = parse_equation("abX=Yba").unwrap();
        let al = eq.alphabet();
        assert_eq!(al.render(eq.lhs()), "abX");
        assert_eq!(al.render(eq.rhs()), "Yba");
        let names = |v: Vec<Symbol>| {
            v.into_iter()
                .map(|s| al.name(s).to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(eq.constants()), ["a", "b"]);
        assert_eq!(names(eq.variables()), ["X", "Y"]);
        assert_eq!(eq.length(), 6);

        let eq = parse_equation("X=X").unwrap();
        assert_eq!(eq.variables().len(), 1);
        assert!(eq.constants().is_empty());

        let eq = parse_equation("a=b").unwrap();
        assert!(eq.variables().is_empty());
        assert_eq!(eq.to_string(), "a=b");
    }

    #[test]
    fn parse_errors() {
        for bad in ["ab", "a=b=c", "a1=b", "a =b"] {
            assert!(
                matches!(parse_equation(bad), Err(WordEqError::Parse(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn brute_force_examples() {
        // |X| = |Y| = k forces X = x·(ba)-suffix shapes; enumerated by hand
        // from the letter-by-letter alignment of abX against Yba.
        assert_eq!(
            solutions("abX=Yba", 3),
            ["X=a, Y=a", "X=ba, Y=ab", "X=aba, Y=aba", "X=bba, Y=abb"]
        );
        assert!(solutions("a=b", 5).is_empty());
        assert_eq!(solutions("aX=Xa", 2), ["X=ε", "X=a", "X=aa"]);
        assert_eq!(solutions("X=X", 0), ["X=ε"]);
        assert_eq!(solutions("a=a", 3), [""]);
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(matrix_of_word("").unwrap(), Mat2::identity());
        assert_eq!(matrix_of_word("a").unwrap(), Mat2::new(1, 0, 1, 1));
        assert_eq!(matrix_of_word("ab").unwrap(), Mat2::new(1, 1, 1, 2));
        assert_eq!(matrix_of_word("ac"), Err(WordEqError::NotGenerator('c')));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_matrix(&Mat2::identity()).unwrap(), "");
        assert_eq!(decode_matrix(&Mat2::new(1, 0, 1, 1)).unwrap(), "a");
        assert_eq!(decode_matrix(&Mat2::new(1, 1, 1, 2)).unwrap(), "ab");
        assert!(decode_matrix(&Mat2::new(2, 0, 0, 1)).is_err());
        assert!(decode_matrix(&Mat2::new(1, -1, 0, 1)).is_err());
    }

    #[test]
    fn encode_matches_displayed_system() {
        let ps = encode_equation(&parse_equation("abX=Yba").unwrap()).unwrap();
        assert_eq!(
            ps.to_text(),
            "X1 + X3 - 2*Y1 - Y2 = 0\n\
             X2 + X4 - Y1 - Y2 = 0\n\
             X1 + 2*X3 - 2*Y3 - Y4 = 0\n\
             X2 + 2*X4 - Y3 - Y4 = 0\n\
             X1*X4 - X2*X3 - 1 = 0\n\
             Y1*Y4 - Y2*Y3 - 1 = 0\n\
             X1 >= 0\nX2 >= 0\nX3 >= 0\nX4 >= 0\n\
             Y1 >= 0\nY2 >= 0\nY3 >= 0\nY4 >= 0\n"
        );
    }

    #[test]
    fn encode_constant_and_rigid_equations() {
        let ps = encode_equation(&parse_equation("a=a").unwrap()).unwrap();
        assert!(ps.unknowns().is_empty());
        assert_eq!(ps.equations().len(), 4);
        assert!(ps.equations().iter().all(Polynomial::is_zero));
        assert!(eval_ok(&ps, &BTreeMap::new()));

        let eq = parse_equation("X=ab").unwrap();
        let ps = encode_equation(&eq).unwrap();
        let good = asg(&[("X1", 1), ("X2", 1), ("X3", 1), ("X4", 2)]);
        assert!(eval_ok(&ps, &good));
        let sigma = substitution_of(&eq, &good).unwrap();
        assert_eq!(sigma.render(eq.alphabet()), "X=ab");

        assert_eq!(
            encode_equation(&parse_equation("Xc=cX").unwrap()),
            Err(WordEqError::UnsupportedConstant("c".into()))
        );
    }

    fn eval_ok(ps: &PolynomialSystem, a: &BTreeMap<String, BigInt>) -> bool {
        crate::poly::eval_poly_system(ps, a).unwrap()
    }

    #[test]
    fn eval_examples() {
        let ps = encode_equation(&parse_equation("abX=Yba").unwrap()).unwrap();
        let a = asg(&[
            ("X1", 1),
            ("X2", 0),
            ("X3", 1),
            ("X4", 1),
            ("Y1", 1),
            ("Y2", 0),
            ("Y3", 1),
            ("Y4", 1),
        ]);
        assert!(eval_ok(&ps, &a));
        let zero: BTreeMap<String, BigInt> = ps
            .unknowns()
            .iter()
            .map(|u| (u.clone(), BigInt::zero()))
            .collect();
        assert!(!eval_ok(&ps, &zero));
    }

    #[test]
    fn four_squares_examples() {
        assert_eq!(four_squares(0), [0, 0, 0, 0]);
        assert_eq!(four_squares(7), [2, 1, 1, 1]);
        assert_eq!(four_squares(1), [1, 0, 0, 0]);
        assert_eq!(four_squares(16), [4, 0, 0, 0]);
    }

    #[test]
    fn single_equation_examples() {
        let names = vec!["x".to_string()];
        let p = Polynomial::var(0).sub(&Polynomial::constant(2));
        let ps = PolynomialSystem::new(names, vec![p], BTreeSet::from([0])).unwrap();
        let single = to_single_equation(&ps);
        assert_eq!(single.unknowns(), ["x_s1", "x_s2", "x_s3", "x_s4"]);
        assert_eq!(single.equations().len(), 1);
        assert!(single.nonneg().is_empty());
        let vals: Vec<BigInt> = [1, 1, 0, 0].into_iter().map(BigInt::from).collect();
        assert!(single.is_satisfied_by(&vals));

        let empty = PolynomialSystem::new(vec![], vec![], BTreeSet::new()).unwrap();
        let single = to_single_equation(&empty);
        assert_eq!(single.to_text(), "0 = 0\n");

        let names = vec!["x".to_string(), "y".to_string()];
        let ps = PolynomialSystem::new(
            names,
            vec![
                Polynomial::var(0).sub(&Polynomial::constant(1)),
                Polynomial::var(1).sub(&Polynomial::constant(2)),
            ],
            BTreeSet::new(),
        )
        .unwrap();
        let single = to_single_equation(&ps);
        assert_eq!(single.to_text(), "x*x + y*y - 2*x - 4*y + 5 = 0\n");
        let sols: Vec<(i64, i64)> = (-4..=4)
            .flat_map(|x| (-4..=4).map(move |y| (x, y)))
            .filter(|&(x, y)| single.is_satisfied_by(&[BigInt::from(x), BigInt::from(y)]))
            .collect();
        assert_eq!(sols, [(1, 2)]);
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let names = vec!["x".to_string(), "x_s1".to_string()];
        let ps = PolynomialSystem::new(names, vec![], BTreeSet::from([0])).unwrap();
        let single = to_single_equation(&ps);
        assert_eq!(single.unknowns(), ["x_s1'", "x_s2", "x_s3", "x_s4", "x_s1"]);
    }
}
