//! Solution sets of linear Diophantine systems over the naturals as rational
//! sets of affine maps, a small engine for rational sets of endomorphisms
//! (EDT0L languages), and the matrix reduction from word equations to
//! polynomial Diophantine systems.

pub mod cli;
pub mod domain;
pub mod edt0l;
pub mod json;
pub mod lindio;
pub mod poly;
pub mod wordeq;

pub use domain::{norm1_mat, norm1_vec, Alphabet, IntMatrix, IntVec, LinearSystem, Symbol, Word};
pub use edt0l::{Edt0lSystem, EndoAutomaton, Endomorphism};
pub use lindio::{
    analyze, brute_force_solutions, build_solution_automaton, normalize_system, AffineAutomaton,
    AffineMap, SolutionSetReport,
};
pub use poly::{eval_poly_system, Polynomial, PolynomialSystem};
pub use wordeq::{
    brute_force_wordeq, decode_matrix, encode_equation, four_squares, matrix_of_word,
    parse_equation, to_single_equation, Mat2, WordEquation,
};
