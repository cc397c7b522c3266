//! Batch classification of a whole constacyclic family by minimum distance,
//! and the self-check suites behind `rrcodes verify-suite`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constacyclic::{ConstacyclicError, ConstacyclicFamily};
use crate::decomp::{
    build_a, decompose_in, distance_of, verify_equivalence, DecompError, DistanceCache,
};
use crate::field::{FieldError, FieldSpec};
use crate::lincode::GeneratorMatrix;
use crate::matprod::{dual_identity_holds, is_nsc, MatprodError, MatrixOverField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Constacyclic(#[from] ConstacyclicError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matprod(#[from] MatprodError),
    #[error("unknown suite family {0:?}")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub exponents: Vec<u32>,
    pub dimension: usize,
    /// 0 for the zero code.
    pub distance: usize,
    pub exact: bool,
}

impl ClassificationRow {
    pub fn is_trivial(&self, length: usize) -> bool {
        self.dimension == 0 || self.dimension == length
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub length: usize,
    pub rows: Vec<ClassificationRow>,
    /// `d -> N_d` over nontrivial codes.
    #[serde(serialize_with = "distance_counts")]
    pub by_distance: BTreeMap<usize, usize>,
    /// `(d, k) -> count` over nontrivial codes.
    #[serde(serialize_with = "distance_dimension_counts")]
    pub by_distance_and_dimension: BTreeMap<(usize, usize), usize>,
    pub all_exact: bool,
}

fn distance_counts<S: serde::Serializer>(
    m: &BTreeMap<usize, usize>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        m.iter()
            .map(|(d, c)| serde_json::json!({"d": d, "count": c})),
    )
}

fn distance_dimension_counts<S: serde::Serializer>(
    m: &BTreeMap<(usize, usize), usize>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        m.iter()
            .map(|((d, k), c)| serde_json::json!({"d": d, "k": k, "count": c})),
    )
}

impl Classification {
    pub fn nontrivial(&self) -> usize {
        self.by_distance.values().sum()
    }
}

/// One row per exponent vector, in lexicographic exponent order. Each
/// distinct component code is enumerated once, before any bound is formed.
pub fn classify(
    family: &ConstacyclicFamily,
    budget: u128,
) -> Result<Classification, ClassifyError> {
    let decomps = family
        .exponent_vectors()
        .into_par_iter()
        .map(|e| decompose_in(family, &e))
        .collect::<Result<Vec<_>, _>>()?;
    let mut distinct = BTreeMap::new();
    for c in decomps.iter().flat_map(|r| r.components()) {
        distinct.entry(c.generator().digit_key()).or_insert(c);
    }
    let cache = DistanceCache::new();
    distinct.into_par_iter().for_each(|(_, c)| {
        cache.distance(c, budget);
    });
    let rows = decomps
        .into_par_iter()
        .map(|r| {
            let dimension: usize = r.components().iter().map(|c| c.dimension()).sum();
            let (distance, exact) = match distance_of(&r, &cache, budget) {
                Ok(b) => (b.bound, b.exact),
                Err(DecompError::Matprod(MatprodError::ZeroCode)) => (0, true),
                Err(err) => return Err(err.into()),
            };
            Ok(ClassificationRow {
                exponents: r.exponents().to_vec(),
                dimension,
                distance,
                exact,
            })
        })
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    let mut by_distance = BTreeMap::new();
    let mut by_distance_and_dimension = BTreeMap::new();
    for row in rows.iter().filter(|r| !r.is_trivial(family.length())) {
        *by_distance.entry(row.distance).or_insert(0) += 1;
        *by_distance_and_dimension
            .entry((row.distance, row.dimension))
            .or_insert(0) += 1;
    }
    Ok(Classification {
        length: family.length(),
        all_exact: rows.iter().all(|r| r.exact),
        rows,
        by_distance,
        by_distance_and_dimension,
    })
}

pub const SUITE_FAMILIES: &[&str] = &[
    "f2-cyclic-6",
    "f3-const-6",
    "f2-cyclic-12",
    "nsc",
    "dual-identity",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub family: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub results: Vec<SuiteResult>,
    pub warnings: Vec<String>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed())
    }
}

fn equivalence_family(
    name: &str,
    p: u64,
    lambda: i64,
    length: usize,
    seed: u64,
) -> Result<SuiteResult, ClassifyError> {
    let spec = FieldSpec::prime(p)?;
    let family = ConstacyclicFamily::new(&spec.from_int(lambda), length, seed)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for e in family.exponent_vectors() {
        let code = family.code(&e)?;
        let r = decompose_in(&family, &e)?;
        let rep = verify_equivalence(&code, &r, 1 << 12);
        if !(rep.row_space && rep.exhaustive == Some(true)) {
            failures.push(format!("exponents {e:?}: {rep:?}"));
        }
        checked += 1;
    }
    Ok(SuiteResult {
        family: name.into(),
        checked,
        failures,
    })
}

fn nsc_family() -> Result<SuiteResult, ClassifyError> {
    let mut failures = Vec::new();
    for (p, k, want) in [(7u64, 1u32, true), (2, 2, false), (2, 1, true)] {
        let spec = FieldSpec::prime(p)?;
        let got = is_nsc(&build_a(p, k, &spec))?;
        if got != want {
            failures.push(format!("p={p} k={k}: NSC {got}, expected {want}"));
        }
    }
    Ok(SuiteResult {
        family: "nsc".into(),
        checked: 3,
        failures,
    })
}

fn dual_identity_family(seed: u64) -> Result<SuiteResult, ClassifyError> {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |label: String,
                     comps: &[GeneratorMatrix],
                     a: &MatrixOverField|
     -> Result<(), ClassifyError> {
        checked += 1;
        if !dual_identity_holds(comps, a)? {
            failures.push(label);
        }
        Ok(())
    };
    let f2 = FieldSpec::prime(2)?;
    let c = GeneratorMatrix::from_ints(&f2, 3, &[vec![1, 1, 1]]).expect("valid rows");
    check(
        "single component".into(),
        &[c],
        &MatrixOverField::identity(&f2, 1),
    )?;
    let uv = MatrixOverField::from_ints(&f2, &[vec![1, 1], vec![0, 1]])?;
    let c1 =
        GeneratorMatrix::from_ints(&f2, 3, &[vec![1, 1, 0], vec![0, 1, 1]]).expect("valid rows");
    let c2 = GeneratorMatrix::from_ints(&f2, 3, &[vec![1, 1, 1]]).expect("valid rows");
    check("(u|u+v)".into(), &[c1, c2], &uv)?;

    let f7 = FieldSpec::prime(7)?;
    let family = ConstacyclicFamily::new(&f7.from_int(6), 56, seed)?;
    let a = build_a(7, 1, &f7);
    let vectors = family.exponent_vectors();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        let e = &vectors[rng.gen_range(0..vectors.len())];
        let r = decompose_in(&family, e)?;
        check(
            format!("length 56 exponents {e:?}"),
            &r.component_matrices(),
            &a,
        )?;
    }
    Ok(SuiteResult {
        family: "dual-identity".into(),
        checked,
        failures,
    })
}

/// Runs the named suites in the order given. An empty selection passes
/// vacuously with a warning.
pub fn run_suite(families: &[String], seed: u64) -> Result<SuiteSummary, ClassifyError> {
    let mut warnings = Vec::new();
    if families.is_empty() {
        warnings.push("no suite family selected; nothing was checked".into());
    }
    let results = families
        .iter()
        .map(|name| match name.as_str() {
            "f2-cyclic-6" => equivalence_family(name, 2, 1, 6, seed),
            "f3-const-6" => equivalence_family(name, 3, 2, 6, seed),
            "f2-cyclic-12" => equivalence_family(name, 2, 1, 12, seed),
            "nsc" => nsc_family(),
            "dual-identity" => dual_identity_family(seed),
            other => Err(ClassifyError::UnknownFamily(other.into())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteSummary { results, warnings })
}
