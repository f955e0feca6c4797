//! Solution sets of `A x = c` over the naturals as automata over affine maps.
//!
//! States are integer vectors `b` with `|b|₁ ≤ 2|A|₁`. An arc `p → q` carries
//! either `x ↦ x + 1_I` (with `q = p + A·1_I`, `I` non-empty) or `x ↦ 2x`
//! (with `q = 2p`), so `A·x = p` implies `A·h(x) = q`. Starting at the zero
//! state with the zero vector and composing arc labels along a path (first arc
//! innermost) produces a solution whenever the path ends in `c`; conversely,
//! every solution is produced by some path. The automaton is built by running
//! the bit-stripping reduction backwards from `c` over the bounded state space
//! and then trimming to the states reachable from zero.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::domain::{DomainError, IntMatrix, IntVec, LinearSystem};

/// Upper limit on the (normalized) dimension; arcs are built for all `2ⁿ - 1`
/// non-empty index sets.
pub const MAX_DIM: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LindioError {
    #[error("system is not normalized: |c|₁ = {target} exceeds |A|₁ = {matrix}")]
    NotNormalized { target: BigInt, matrix: BigInt },
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    TooManyVariables(usize),
    #[error("invalid affine map: {0}")]
    InvalidMap(&'static str),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// `x ↦ λx + 1_I` restricted to the two label shapes used on arcs:
/// `λ = 1` with `I` non-empty, or `λ = 2` with `I` empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineMap {
    scale: u8,
    add_set: Vec<usize>,
    dim: usize,
}

impl AffineMap {
    /// `x ↦ x + 1_I`. Indices are zero-based.
    pub fn add(dim: usize, set: impl IntoIterator<Item = usize>) -> Result<Self, LindioError> {
        let add_set: BTreeSet<usize> = set.into_iter().collect();
        if add_set.is_empty() {
            return Err(LindioError::InvalidMap("add set must be non-empty"));
        }
        if add_set.iter().any(|&i| i >= dim) {
            return Err(LindioError::InvalidMap("add index out of range"));
        }
        Ok(AffineMap {
            scale: 1,
            add_set: add_set.into_iter().collect(),
            dim,
        })
    }

    /// `x ↦ 2x`.
    pub fn double(dim: usize) -> Self {
        AffineMap {
            scale: 2,
            add_set: Vec::new(),
            dim,
        }
    }

    pub fn scale(&self) -> u8 {
        self.scale
    }

    pub fn add_set(&self) -> &[usize] {
        &self.add_set
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_double(&self) -> bool {
        self.scale == 2
    }

    pub fn apply(&self, x: &IntVec) -> IntVec {
        assert_eq!(x.dim(), self.dim);
        if self.is_double() {
            return x.scale(&BigInt::from(2));
        }
        let mut entries = x.entries().to_vec();
        for &i in &self.add_set {
            entries[i] += 1;
        }
        IntVec::new(entries).expect("dimension preserved")
    }

    /// `2x` or `+1_{i,j}` with one-based indices.
    pub fn label(&self) -> String {
        if self.is_double() {
            return "2x".to_string();
        }
        let idx: Vec<String> = self.add_set.iter().map(|i| (i + 1).to_string()).collect();
        format!("+1_{{{}}}", idx.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineArc {
    pub source: usize,
    pub map: AffineMap,
    pub target: usize,
}

/// Trimmed automaton whose accepted compositions, applied to zero, are exactly
/// the natural solutions of its (normalized) system.
#[derive(Clone, Debug)]
pub struct AffineAutomaton {
    system: LinearSystem,
    norm_bound: BigInt,
    states: Vec<IntVec>,
    arcs: Vec<AffineArc>,
    initial: Option<usize>,
    accepting: Option<usize>,
}

/// Pads a system with a dummy variable until `|c|₁ ≤ |A|₁`.
///
/// The dummy gets a fresh row `d·x_{n+1} = 0` with `d = |c|₁ - |A|₁`, which
/// forces it to zero. `projection` lists the original coordinates.
pub fn normalize_system(s: &LinearSystem) -> (LinearSystem, Vec<usize>) {
    let n = s.dim();
    let projection: Vec<usize> = (0..n).collect();
    let (a_norm, c_norm) = (s.matrix().norm1(), s.target().norm1());
    if c_norm <= a_norm {
        return (s.clone(), projection);
    }
    let deficit = c_norm - a_norm;
    let m = n + 1;
    let mut entries = vec![BigInt::zero(); m * m];
    for i in 0..n {
        for j in 0..n {
            entries[i * m + j] = s.matrix().get(i, j).clone();
        }
    }
    entries[n * m + n] = deficit;
    let mut target = s.target().entries().to_vec();
    target.push(BigInt::zero());
    let padded = LinearSystem::new(
        IntMatrix::new(m, m, entries).expect("square"),
        IntVec::new(target).expect("non-empty"),
    )
    .expect("consistent dimensions");
    (padded, projection)
}

fn nonempty_subsets(a: &IntMatrix) -> Vec<(AffineMap, IntVec)> {
    let n = a.cols();
    (1u32..(1 << n))
        .map(|mask| {
            let set: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
            let delta = a.column_sum(&set);
            (AffineMap::add(n, set).expect("non-empty"), delta)
        })
        .collect()
}

fn halve(v: &IntVec) -> Option<IntVec> {
    if v.entries().iter().all(|e| e.is_even()) {
        let half = v.entries().iter().map(|e| e / 2).collect();
        Some(IntVec::new(half).expect("non-empty"))
    } else {
        None
    }
}

/// Builds the trimmed solution automaton of a normalized system.
pub fn build_solution_automaton(s: &LinearSystem) -> Result<AffineAutomaton, LindioError> {
    if !s.is_normalized() {
        return Err(LindioError::NotNormalized {
            target: s.target().norm1(),
            matrix: s.matrix().norm1(),
        });
    }
    let n = s.dim();
    if n > MAX_DIM {
        return Err(LindioError::TooManyVariables(n));
    }
    let norm_bound = s.matrix().norm1() * 2;
    let adds = nonempty_subsets(s.matrix());
    let double = AffineMap::double(n);

    // Backward pass: every state from which `c` is reachable.
    let mut coreachable: HashSet<IntVec> = HashSet::new();
    let mut raw_arcs: Vec<(IntVec, AffineMap, IntVec)> = Vec::new();
    let mut queue = VecDeque::new();
    coreachable.insert(s.target().clone());
    queue.push_back(s.target().clone());
    while let Some(q) = queue.pop_front() {
        for (map, delta) in &adds {
            let p = q.sub(delta);
            if p.norm1() <= norm_bound {
                raw_arcs.push((p.clone(), map.clone(), q.clone()));
                if coreachable.insert(p.clone()) {
                    queue.push_back(p);
                }
            }
        }
        if let Some(p) = halve(&q) {
            raw_arcs.push((p.clone(), double.clone(), q.clone()));
            if coreachable.insert(p.clone()) {
                queue.push_back(p);
            }
        }
    }

    let zero = IntVec::zeros(n);
    if !coreachable.contains(&zero) {
        return Ok(AffineAutomaton {
            system: s.clone(),
            norm_bound,
            states: Vec::new(),
            arcs: Vec::new(),
            initial: None,
            accepting: None,
        });
    }

    // Forward pass restricted to co-reachable states.
    let mut out: HashMap<&IntVec, Vec<usize>> = HashMap::new();
    for (i, (p, _, _)) in raw_arcs.iter().enumerate() {
        out.entry(p).or_default().push(i);
    }
    let mut reachable: HashSet<&IntVec> = HashSet::new();
    let mut stack = vec![&zero];
    reachable.insert(&zero);
    while let Some(p) = stack.pop() {
        for &i in out.get(p).map(Vec::as_slice).unwrap_or(&[]) {
            let q = &raw_arcs[i].2;
            if reachable.insert(q) {
                stack.push(q);
            }
        }
    }

    let mut states: Vec<IntVec> = reachable.iter().map(|&v| v.clone()).collect();
    states.sort();
    let index: HashMap<&IntVec, usize> = states.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut arcs: Vec<AffineArc> = raw_arcs
        .iter()
        .filter(|(p, _, _)| reachable.contains(p))
        .map(|(p, map, q)| AffineArc {
            source: index[p],
            map: map.clone(),
            target: index[q],
        })
        .collect();
    arcs.sort_by(|x, y| (x.source, &x.map, x.target).cmp(&(y.source, &y.map, y.target)));

    let initial = Some(index[&zero]);
    let accepting = Some(index[s.target()]);
    Ok(AffineAutomaton {
        system: s.clone(),
        norm_bound,
        states,
        arcs,
        initial,
        accepting,
    })
}

impl AffineAutomaton {
    pub fn system(&self) -> &LinearSystem {
        &self.system
    }

    pub fn dim(&self) -> usize {
        self.system.dim()
    }

    pub fn norm_bound(&self) -> &BigInt {
        &self.norm_bound
    }

    /// States in lexicographic order.
    pub fn states(&self) -> &[IntVec] {
        &self.states
    }

    pub fn arcs(&self) -> &[AffineArc] {
        &self.arcs
    }

    /// Index of the zero state, absent when the trimmed automaton is empty.
    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    pub fn accepting(&self) -> Option<usize> {
        self.accepting
    }

    fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.states.len()];
        for (i, arc) in self.arcs.iter().enumerate() {
            out[arc.source].push(i);
        }
        out
    }

    /// Checks `q = p + A·1_I` for add arcs and `q = 2p` for doubling arcs.
    pub fn arc_is_sound(&self, arc: &AffineArc) -> bool {
        let (p, q) = (&self.states[arc.source], &self.states[arc.target]);
        if arc.map.is_double() {
            *q == p.scale(&BigInt::from(2))
        } else {
            *q == p.add(&self.system.matrix().column_sum(arc.map.add_set()))
        }
    }

    /// Composes the labels of a path given as arc indices, applied to zero.
    pub fn path_value(&self, path: &[usize]) -> IntVec {
        path.iter().fold(IntVec::zeros(self.dim()), |x, &i| {
            self.arcs[i].map.apply(&x)
        })
    }

    /// The final state is reachable from the zero state. With `c = 0` the
    /// empty path counts.
    pub fn is_solvable(&self) -> bool {
        self.initial.is_some() && self.accepting.is_some()
    }

    /// Solvable, and the homogeneous system `A y = 0` has a non-zero natural
    /// solution. The latter is read off the homogeneous automaton: any
    /// accepting path through an add arc yields a non-zero `y`.
    pub fn is_infinite(&self) -> bool {
        if !self.is_solvable() {
            return false;
        }
        let homogeneous =
            LinearSystem::new(self.system.matrix().clone(), IntVec::zeros(self.dim()))
                .expect("same dimensions");
        let aut = build_solution_automaton(&homogeneous).expect("homogeneous system is normalized");
        aut.arcs.iter().any(|arc| !arc.map.is_double())
    }

    /// All solutions with every coordinate at most `coord_bound`, sorted.
    ///
    /// Explores `(state, partial value)` pairs; both label shapes are
    /// non-decreasing on natural vectors, so pruning on the bound is exact.
    pub fn enumerate_solutions(&self, coord_bound: u64) -> Vec<IntVec> {
        let (Some(start), Some(accept)) = (self.initial, self.accepting) else {
            return Vec::new();
        };
        let bound = BigInt::from(coord_bound);
        let out = self.out_arcs();
        let mut found = BTreeSet::new();
        let mut seen: HashSet<(usize, IntVec)> = HashSet::new();
        let mut queue = VecDeque::new();
        let origin = (start, IntVec::zeros(self.dim()));
        seen.insert(origin.clone());
        queue.push_back(origin);
        while let Some((state, value)) = queue.pop_front() {
            if state == accept {
                found.insert(value.clone());
            }
            for &i in &out[state] {
                let arc = &self.arcs[i];
                let next = arc.map.apply(&value);
                if next.entries().iter().any(|e| *e > bound) {
                    continue;
                }
                let pair = (arc.target, next);
                if !seen.contains(&pair) {
                    seen.insert(pair.clone());
                    queue.push_back(pair);
                }
            }
        }
        found.into_iter().collect()
    }

    /// A solution of least 1-norm (lexicographically least among those).
    pub fn min_norm_solution(&self) -> Option<IntVec> {
        let (start, accept) = (self.initial?, self.accepting?);
        let out = self.out_arcs();
        let mut heap = BinaryHeap::new();
        let mut done: HashSet<(usize, IntVec)> = HashSet::new();
        heap.push(Reverse((BigInt::zero(), IntVec::zeros(self.dim()), start)));
        while let Some(Reverse((norm, value, state))) = heap.pop() {
            if state == accept {
                return Some(value);
            }
            if !done.insert((state, value.clone())) {
                continue;
            }
            for &i in &out[state] {
                let arc = &self.arcs[i];
                let next = arc.map.apply(&value);
                if !done.contains(&(arc.target, next.clone())) {
                    let next_norm = if arc.map.is_double() {
                        &norm * 2
                    } else {
                        &norm + arc.map.add_set().len()
                    };
                    heap.push(Reverse((next_norm, next, arc.target)));
                }
            }
        }
        None
    }

    /// Graphviz rendering: states labelled by their vectors, arcs by `2x` or
    /// `+1_{…}`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph solutions {\n  rankdir=LR;\n  node [shape=circle];\n");
        if let Some(start) = self.initial {
            s.push_str("  start [shape=point];\n");
            for (i, v) in self.states.iter().enumerate() {
                let shape = if Some(i) == self.accepting {
                    ", shape=doublecircle"
                } else {
                    ""
                };
                let _ = writeln!(s, "  s{i} [label=\"{v}\"{shape}];");
            }
            let _ = writeln!(s, "  start -> s{start};");
            for arc in &self.arcs {
                let _ = writeln!(
                    s,
                    "  s{} -> s{} [label=\"{}\"];",
                    arc.source,
                    arc.target,
                    arc.map.label()
                );
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Exhaustive scan of `[0..coord_bound]ⁿ`, in lexicographic order.
pub fn brute_force_solutions(s: &LinearSystem, coord_bound: u64) -> Vec<IntVec> {
    let n = s.dim();
    let mut x = vec![0u64; n];
    let mut found = Vec::new();
    loop {
        let v = IntVec::new(x.iter().map(|&e| BigInt::from(e)).collect()).expect("n > 0");
        if s.matrix().mul_vec(&v) == *s.target() {
            found.push(v);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return found;
            }
            i -= 1;
            if x[i] < coord_bound {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
    }
}

/// Solvability, infiniteness and a least-norm witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSetReport {
    pub solvable: bool,
    pub infinite: bool,
    pub witness: Option<IntVec>,
}

/// A system together with its normalized form, automaton and report.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub original: LinearSystem,
    pub normalized: LinearSystem,
    pub projection: Vec<usize>,
    pub automaton: AffineAutomaton,
    pub report: SolutionSetReport,
}

impl Analysis {
    /// Solutions in the original coordinates, each coordinate ≤ `coord_bound`.
    pub fn solutions(&self, coord_bound: u64) -> Vec<IntVec> {
        let projected: BTreeSet<IntVec> = self
            .automaton
            .enumerate_solutions(coord_bound)
            .iter()
            .map(|x| x.project(&self.projection))
            .collect();
        projected.into_iter().collect()
    }
}

/// Normalizes, builds the automaton and answers the standard queries. The
/// witness is reported in the original coordinates.
pub fn analyze(s: &LinearSystem) -> Result<Analysis, LindioError> {
    let (normalized, projection) = normalize_system(s);
    let automaton = build_solution_automaton(&normalized)?;
    let solvable = automaton.is_solvable();
    let infinite = automaton.is_infinite();
    let witness = automaton
        .min_norm_solution()
        .map(|x| x.project(&projection));
    Ok(Analysis {
        original: s.clone(),
        normalized,
        projection,
        automaton,
        report: SolutionSetReport {
            solvable,
            infinite,
            witness,
        },
    })
}

/// The reference count `|A|₁^(2n+1)` for the canonical state set.
pub fn reference_state_count(a: &IntMatrix) -> BigInt {
    num_traits::pow(a.norm1(), 2 * a.rows() + 1)
}

/// `(2|A|₁ + 1)ⁿ`, an upper bound on the number of states.
pub fn state_bound(a: &IntMatrix) -> BigInt {
    num_traits::pow(a.norm1() * 2 + BigInt::one(), a.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(a: &[Vec<i64>], c: &[i64]) -> LinearSystem {
        LinearSystem::from_i64s(a, c).unwrap()
    }

    fn vecs(vs: &[&[i64]]) -> Vec<IntVec> {
        vs.iter().map(|v| IntVec::from_i64s(v).unwrap()).collect()
    }

    fn automaton(a: &[Vec<i64>], c: &[i64]) -> AffineAutomaton {
        let (s, _) = normalize_system(&sys(a, c));
        build_solution_automaton(&s).unwrap()
    }

    #[test]
    fn normalize_is_noop_when_balanced() {
        let s = sys(&[vec![1, 1], vec![0, 0]], &[2, 0]);
        let (n, proj) = normalize_system(&s);
        assert_eq!(n, s);
        assert_eq!(proj, vec![0, 1]);
    }

    #[test]
    fn normalize_pads_with_dummy() {
        let (n, proj) = normalize_system(&sys(&[vec![2]], &[3]));
        assert_eq!(n, sys(&[vec![2, 0], vec![0, 1]], &[3, 0]));
        assert_eq!(proj, vec![0]);
        assert!(n.is_normalized());

        let (n, _) = normalize_system(&sys(&[vec![0]], &[5]));
        assert!(n.is_normalized());
        assert_eq!(n.dim(), 2);
    }

    #[test]
    fn normalization_preserves_bounded_solutions() {
        for (a, c) in [
            (vec![vec![2]], vec![3]),
            (vec![vec![0]], vec![5]),
            (vec![vec![1]], vec![4]),
        ] {
            let s = sys(&a, &c);
            let (n, proj) = normalize_system(&s);
            let padded: Vec<IntVec> = brute_force_solutions(&n, 10)
                .iter()
                .map(|x| x.project(&proj))
                .collect();
            assert_eq!(padded, brute_force_solutions(&s, 10));
        }
    }

    #[test]
    fn rejects_unnormalized_input() {
        let err = build_solution_automaton(&sys(&[vec![2]], &[3])).unwrap_err();
        assert!(matches!(err, LindioError::NotNormalized { .. }));
    }

    #[test]
    fn affine_map_shapes() {
        assert!(AffineMap::add(2, []).is_err());
        assert!(AffineMap::add(2, [2]).is_err());
        let m = AffineMap::add(3, [2, 0]).unwrap();
        assert_eq!(m.label(), "+1_{1,3}");
        assert_eq!(AffineMap::double(3).label(), "2x");
        let x = IntVec::from_i64s(&[1, 2, 3]).unwrap();
        assert_eq!(m.apply(&x), IntVec::from_i64s(&[2, 2, 4]).unwrap());
        assert_eq!(
            AffineMap::double(3).apply(&x),
            IntVec::from_i64s(&[2, 4, 6]).unwrap()
        );
    }

    #[test]
    fn unary_two_has_add_then_double_path() {
        let aut = automaton(&[vec![1]], &[2]);
        let state = |v: i64| {
            aut.states()
                .iter()
                .position(|s| *s == IntVec::from_i64s(&[v, 0]).unwrap())
                .unwrap()
        };
        let find = |from, double: bool, to| {
            aut.arcs()
                .iter()
                .position(|a| a.source == from && a.target == to && a.map.is_double() == double)
                .unwrap()
        };
        let path = [
            find(state(0), false, state(1)),
            find(state(1), true, state(2)),
        ];
        // x = 2 is padded with a dummy row to reach |c|₁ ≤ |A|₁
        assert_eq!(aut.path_value(&path), IntVec::from_i64s(&[2, 0]).unwrap());
        assert_eq!(aut.enumerate_solutions(10), vecs(&[&[2, 0]]));
    }

    #[test]
    fn parity_obstruction_gives_empty_automaton() {
        let aut = automaton(&[vec![2]], &[1]);
        assert!(aut.states().is_empty());
        assert!(aut.arcs().is_empty());
        assert!(!aut.is_solvable());
        assert!(aut.enumerate_solutions(100).is_empty());
        assert_eq!(aut.min_norm_solution(), None);
    }

    #[test]
    fn solvability_examples() {
        assert!(automaton(&[vec![1]], &[0]).is_solvable());
        assert!(!automaton(&[vec![2]], &[1]).is_solvable());
        let aut = automaton(&[vec![3]], &[12]);
        assert!(aut.is_solvable());
        assert_eq!(
            aut.min_norm_solution(),
            Some(IntVec::from_i64s(&[4, 0]).unwrap())
        );
    }

    #[test]
    fn zero_target_has_zero_witness() {
        let a = analyze(&sys(&[vec![1]], &[0])).unwrap();
        assert!(a.report.solvable);
        assert!(!a.report.infinite);
        assert_eq!(a.report.witness, Some(IntVec::from_i64s(&[0]).unwrap()));
    }

    #[test]
    fn infiniteness_examples() {
        assert!(automaton(&[vec![1, -1], vec![0, 0]], &[0, 0]).is_infinite());
        assert!(!automaton(&[vec![1, 0], vec![0, 1]], &[1, 1]).is_infinite());
        assert!(!automaton(&[vec![1, 1], vec![0, 0]], &[2, 0]).is_infinite());
        // homogeneous solutions exist but the system itself is unsolvable
        assert!(!automaton(&[vec![2, -2], vec![0, 0]], &[1, 0]).is_infinite());
    }

    #[test]
    fn enumeration_examples() {
        let aut = automaton(&[vec![1, 1], vec![0, 0]], &[2, 0]);
        assert_eq!(
            aut.enumerate_solutions(4),
            vecs(&[&[0, 2], &[1, 1], &[2, 0]])
        );
        let aut = automaton(&[vec![1, -1], vec![0, 0]], &[0, 0]);
        assert_eq!(
            aut.enumerate_solutions(3),
            vecs(&[&[0, 0], &[1, 1], &[2, 2], &[3, 3]])
        );
    }

    #[test]
    fn brute_force_examples() {
        let s = sys(&[vec![1, 1], vec![0, 0]], &[2, 0]);
        assert_eq!(
            brute_force_solutions(&s, 2),
            vecs(&[&[0, 2], &[1, 1], &[2, 0]])
        );
        let s = sys(&[vec![3, -1], vec![2, 5]], &[0, 0]);
        assert_eq!(brute_force_solutions(&s, 0), vecs(&[&[0, 0]]));
        assert!(brute_force_solutions(&sys(&[vec![3]], &[7]), 10).is_empty());
    }

    #[test]
    fn zero_matrix_accepts_everything() {
        let aut = automaton(&[vec![0, 0], vec![0, 0]], &[0, 0]);
        assert_eq!(aut.enumerate_solutions(1).len(), 4);
        assert!(aut.is_infinite());
    }

    #[test]
    fn states_and_arcs_are_canonically_ordered() {
        let aut = automaton(&[vec![1, 2, -1], vec![0, 1, 1], vec![2, 0, 1]], &[3, 2, 1]);
        assert!(aut.states().windows(2).all(|w| w[0] < w[1]));
        assert!(
            aut.arcs()
                .windows(2)
                .all(|w| (w[0].source, &w[0].map, w[0].target)
                    < (w[1].source, &w[1].map, w[1].target))
        );
        assert!(aut.arcs().iter().all(|a| aut.arc_is_sound(a)));
        assert!(aut.states().iter().all(|s| s.norm1() <= *aut.norm_bound()));
    }

    #[test]
    fn dot_output_lists_every_arc() {
        let aut = automaton(&[vec![1]], &[2]);
        let dot = aut.to_dot();
        assert!(dot.starts_with("digraph solutions {"));
        assert_eq!(dot.matches(" -> s").count(), aut.arcs().len() + 1);
        assert!(dot.contains("label=\"2x\""));
        assert!(dot.contains("label=\"+1_{1}\""));
        assert!(automaton(&[vec![2]], &[1])
            .to_dot()
            .ends_with("rankdir=LR;\n  node [shape=circle];\n}\n"));
    }
}
