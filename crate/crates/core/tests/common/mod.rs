#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use eqset::LinearSystem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2016;

/// Corpus RNG, seeded from `EQSET_SEED` when set.
pub fn corpus_rng() -> ChaCha8Rng {
    let seed = std::env::var("EQSET_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    ChaCha8Rng::seed_from_u64(seed)
}

/// Square systems with `n ∈ {1,2,3}` and all entries of `A` and `c` in `[-3, 3]`.
pub fn random_systems(rng: &mut impl Rng, count: usize) -> Vec<LinearSystem> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=3);
            let a: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            LinearSystem::from_i64s(&a, &c).unwrap()
        })
        .collect()
}

/// `[0..bound]ⁿ` in lexicographic order.
pub fn grid(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// `A·x` with machine integers, independent of the library's arithmetic.
pub fn apply(s: &LinearSystem, x: &[i64]) -> Vec<i64> {
    let n = s.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i64::try_from(s.matrix().get(i, j)).unwrap() * x[j])
                .sum()
        })
        .collect()
}

pub fn target(s: &LinearSystem) -> Vec<i64> {
    s.target()
        .entries()
        .iter()
        .map(|e| i64::try_from(e).unwrap())
        .collect()
}

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    manifest_dir().join("tests/golden")
}

/// `(name, args)` for every golden-file CLI case; paths are relative to the
/// crate directory.
pub fn golden_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    let inputs = "tests/golden/inputs";
    let leak = |s: String| -> &'static str { Box::leak(s.into_boxed_str()) };
    let input = |f: &str| leak(format!("{inputs}/{f}"));
    vec![
        (
            "lindio_pair",
            vec!["lindio", input("pair.json"), "--bound", "4"],
        ),
        (
            "lindio_pair_json",
            vec![
                "--format",
                "json",
                "lindio",
                input("pair.json"),
                "--bound",
                "4",
            ],
        ),
        ("lindio_parity", vec!["lindio", input("parity.json")]),
        ("lindio_zero", vec!["lindio", input("zero.json")]),
        (
            "lindio_diagonal",
            vec!["lindio", input("diagonal.json"), "--bound", "3"],
        ),
        (
            "lindio_inline",
            vec!["lindio", r#"{"A": [[3]], "c": [12]}"#, "--bound", "10"],
        ),
        (
            "lindio_pair_dot",
            vec!["--format", "dot", "lindio", input("pair.json")],
        ),
        ("lindio_ragged", vec!["lindio", input("ragged.json")]),
        (
            "wordeq_solve",
            vec!["wordeq", "solve", "abX=Yba", "--cap", "3"],
        ),
        (
            "wordeq_solve_json",
            vec!["--format", "json", "wordeq", "solve", "aX=Xa", "--cap", "2"],
        ),
        (
            "wordeq_solve_none",
            vec!["wordeq", "solve", "a=b", "--cap", "5"],
        ),
        ("wordeq_encode", vec!["wordeq", "encode", "abX=Yba"]),
        (
            "wordeq_encode_json",
            vec!["--format", "json", "wordeq", "encode", "X=ab"],
        ),
        (
            "wordeq_encode_single",
            vec!["wordeq", "encode", "X=ab", "--single"],
        ),
        (
            "wordeq_check_a",
            vec![
                "wordeq",
                "check",
                "abX=Yba",
                "--assign",
                input("assign_a.json"),
            ],
        ),
        (
            "wordeq_check_zero",
            vec![
                "wordeq",
                "check",
                "abX=Yba",
                "--assign",
                input("assign_zero.json"),
            ],
        ),
        ("wordeq_malformed", vec!["wordeq", "solve", "a=b=c"]),
        ("wordeq_unsupported", vec!["wordeq", "encode", "cX=Xc"]),
        (
            "edt0l_enumerate",
            vec!["edt0l", "enumerate", input("doubling.json"), "--cap", "8"],
        ),
        (
            "edt0l_enumerate_json",
            vec![
                "--format",
                "json",
                "edt0l",
                "enumerate",
                input("doubling.json"),
                "--cap",
                "8",
            ],
        ),
        (
            "edt0l_empty_yes",
            vec!["edt0l", "empty", input("unreachable.json")],
        ),
        (
            "edt0l_empty_no",
            vec!["edt0l", "empty", input("doubling.json")],
        ),
        (
            "edt0l_infinite",
            vec!["edt0l", "infinite", input("doubling.json")],
        ),
        (
            "edt0l_infinite_unreachable",
            vec!["edt0l", "infinite", input("unreachable.json")],
        ),
        (
            "edt0l_tuples",
            vec!["edt0l", "tuples", input("pairs.json"), "--cap", "6"],
        ),
        (
            "edt0l_erasing",
            vec![
                "edt0l",
                "enumerate",
                input("erasing.json"),
                "--cap",
                "10",
                "--depth-cap",
                "4",
            ],
        ),
        (
            "edt0l_dot",
            vec![
                "--format",
                "dot",
                "edt0l",
                "enumerate",
                input("doubling.json"),
            ],
        ),
        (
            "edt0l_bad_symbol",
            vec!["edt0l", "enumerate", input("bad_symbol.json")],
        ),
    ]
}

/// Exit code followed by stdout and stderr, the byte content compared
/// against golden files.
pub fn run_cli(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_eqset"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

pub fn golden_path(name: &str) -> PathBuf {
    golden_dir().join(format!("{name}.out"))
}

pub fn read_golden(path: &Path) -> Option<String> {
    std::fs::read_to_string(path).ok()
}
