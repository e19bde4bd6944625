//! Seeded property suites and character-table fixtures.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sextic_core::binforms::{sl2_act, transvectant};
use sextic_core::groups::{build_group, GroupName, SubgroupTable};
use sextic_core::invariants::fundamental_invariants;
use sextic_core::{BinaryForm, CycloNum, Field, Mat2};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(r: &mut impl Rng) -> BigRational {
    BigRational::new(BigInt::from(r.gen_range(-6i64..=6)), BigInt::from(r.gen_range(1i64..=4)))
}

/// A random element of Q(ζ₂₄), roughly half its coefficients zero.
pub fn random_cyclo(r: &mut impl Rng) -> CycloNum {
    let c: [BigRational; 8] =
        std::array::from_fn(|_| if r.gen_bool(0.5) { small_rational(r) } else { BigRational::from_integer(0.into()) });
    CycloNum::from_coeffs(&c)
}

fn gaussian(r: &mut impl Rng, bound: i64) -> CycloNum {
    CycloNum::from_int(r.gen_range(-bound..=bound)) + CycloNum::i() * CycloNum::from_int(r.gen_range(-bound..=bound))
}

fn random_form(r: &mut impl Rng, deg: usize) -> BinaryForm<CycloNum> {
    BinaryForm::new((0..=deg).map(|_| gaussian(r, 3)).collect())
}

/// Product of unipotents with Gaussian-integer entries.
fn random_sl2(r: &mut impl Rng) -> Mat2<CycloNum> {
    let (one, zero) = (CycloNum::one(), CycloNum::zero());
    let up = Mat2::new(one.clone(), gaussian(r, 2), zero.clone(), one.clone());
    let low = Mat2::new(one.clone(), zero.clone(), gaussian(r, 2), one.clone());
    let up2 = Mat2::new(one.clone(), gaussian(r, 1), zero, one);
    up.mul(&low).mul(&up2)
}

pub fn field_axioms(r: &mut impl Rng, samples: usize) -> SuiteResult {
    let mut failures = Vec::new();
    for s in 0..samples {
        let (a, b, c) = (random_cyclo(r), random_cyclo(r), random_cyclo(r));
        let mut fail = |law: &str, ok: bool| {
            if !ok {
                failures.push(format!("sample {s}: {law} with a = {a}, b = {b}, c = {c}"));
            }
        };
        fail("additive associativity", (a.clone() + b.clone()) + c.clone() == a.clone() + (b.clone() + c.clone()));
        fail("multiplicative associativity", (a.clone() * b.clone()) * c.clone() == a.clone() * (b.clone() * c.clone()));
        fail("commutativity", a.clone() * b.clone() == b.clone() * a.clone() && a.clone() + b.clone() == b.clone() + a.clone());
        fail("distributivity", a.clone() * (b.clone() + c.clone()) == a.clone() * b.clone() + a.clone() * c.clone());
        fail("identities", a.clone() + CycloNum::zero() == a && a.clone() * CycloNum::one() == a);
        fail("negation", (a.clone() - a.clone()).is_zero());
        if !a.is_zero() {
            fail("inverse", a.try_inv().map(|i| i * a.clone() == CycloNum::one()).unwrap_or(false));
        }
        fail("conjugation", (a.clone() * b.clone()).conj() == a.conj() * b.conj() && (a.clone() + b.clone()).conj() == a.conj() + b.conj());
    }
    SuiteResult { name: "field_axioms".into(), cases: samples, failures }
}

/// A·(f, h)_p = (A·f, A·h)_p for random forms and random A in SL₂.
pub fn transvectant_equivariance(r: &mut impl Rng, triples: usize) -> SuiteResult {
    let mut failures = Vec::new();
    for s in 0..triples {
        let (m, n) = (r.gen_range(1..=5), r.gen_range(1..=5));
        let p = r.gen_range(0..=m.min(n));
        let (f, h, a) = (random_form(r, m), random_form(r, n), random_sl2(r));
        let ok = (|| {
            let lhs = sl2_act(&a, &transvectant(&f, &h, p).ok()?).ok()?;
            let rhs = transvectant(&sl2_act(&a, &f).ok()?, &sl2_act(&a, &h).ok()?, p).ok()?;
            Some(lhs == rhs)
        })();
        if ok != Some(true) {
            failures.push(format!("triple {s}: p = {p}, f = {f}, h = {h}"));
        }
    }
    SuiteResult { name: "transvectant_equivariance".into(), cases: triples, failures }
}

/// The dihedral, tetrahedral and octahedral syzygies, the dihedral one for
/// each index in use.
pub fn syzygies() -> SuiteResult {
    let groups = [
        GroupName::BinDihedral(2),
        GroupName::BinDihedral(3),
        GroupName::BinDihedral(4),
        GroupName::BinTetra,
        GroupName::BinOcta,
    ];
    let mut failures = Vec::new();
    for g in groups {
        match fundamental_invariants(g) {
            Ok(reg) if reg.syzygy_residual().is_zero() => {}
            Ok(reg) => failures.push(format!("{}: residual {}", g.token(), reg.syzygy_residual())),
            Err(e) => failures.push(format!("{}: {e}", g.token())),
        }
    }
    SuiteResult { name: "syzygies".into(), cases: groups.len(), failures }
}

/// Groups whose character tables the acceptance checks read.
pub const CHECKED_TABLES: [&str; 5] = ["Q8", "Dic12", "Q16", "BinTetra", "BinOcta"];

/// A character table as plain data. Entries are the eight power-basis
/// coefficients over Q(ζ₂₄).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFixture {
    pub group: String,
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub irrep_labels: Vec<String>,
    pub dims: Vec<usize>,
    pub table: Vec<Vec<Vec<String>>>,
}

impl TableFixture {
    pub fn from_table(g: &SubgroupTable) -> Self {
        TableFixture {
            group: g.name.token(),
            class_labels: g.class_labels.clone(),
            class_sizes: g.classes.iter().map(Vec::len).collect(),
            irrep_labels: g.irrep_labels.clone(),
            dims: g.dims.clone(),
            table: g.char_table.iter().map(|row| row.iter().map(CycloNum::to_strings).collect()).collect(),
        }
    }

    pub fn entries(&self) -> Result<Vec<Vec<CycloNum>>, String> {
        self.table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        let parts: Vec<&str> = e.iter().map(String::as_str).collect();
                        CycloNum::parse_strings(&parts).ok_or_else(|| format!("{}: unreadable entry {e:?}", self.group))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Names of the table laws the fixture breaks.
pub fn check_fixture(fx: &TableFixture) -> Vec<String> {
    let chi = match fx.entries() {
        Ok(c) => c,
        Err(e) => return vec![e],
    };
    let mut failed = Vec::new();
    let h = fx.class_sizes.len();
    let order: usize = fx.class_sizes.iter().sum();
    if chi.len() != h || fx.dims.len() != h || chi.iter().any(|r| r.len() != h) {
        return vec!["class_count".into()];
    }
    if fx.dims.iter().map(|d| d * d).sum::<usize>() != order {
        failed.push("sum_of_squared_dims".into());
    }
    if (0..h).any(|a| chi[a][0] != CycloNum::from_int(fx.dims[a] as i64)) {
        failed.push("degree_column".into());
    }
    let inner = |a: &[CycloNum], b: &[CycloNum]| {
        let s = (0..h).fold(CycloNum::zero(), |acc, c| {
            acc + CycloNum::from_int(fx.class_sizes[c] as i64) * a[c].clone() * b[c].conj()
        });
        s * CycloNum::from_ratio(1, order as i64)
    };
    let rows_ok = (0..h).all(|a| (0..h).all(|b| inner(&chi[a], &chi[b]) == if a == b { CycloNum::one() } else { CycloNum::zero() }));
    if !rows_ok {
        failed.push("orthonormality".into());
    }
    let cols_ok = (0..h).all(|c1| {
        (0..h).all(|c2| {
            let s = chi.iter().fold(CycloNum::zero(), |acc, row| acc + row[c1].clone() * row[c2].conj());
            let want = if c1 == c2 { CycloNum::from_ratio(order as i64, fx.class_sizes[c1] as i64) } else { CycloNum::zero() };
            s == want
        })
    });
    if !cols_ok {
        failed.push("column_orthogonality".into());
    }
    failed
}

pub fn reference_fixtures() -> Vec<TableFixture> {
    CHECKED_TABLES
        .iter()
        .map(|n| TableFixture::from_table(&build_group(GroupName::parse(n).expect("known name")).expect("built")))
        .collect()
}

/// `3chi4 + 2chi5` style rendering of multiplicities.
pub fn format_decomposition(labels: &[String], mult: &[usize]) -> String {
    let parts: Vec<String> = mult
        .iter()
        .zip(labels)
        .filter(|(m, _)| **m > 0)
        .map(|(m, l)| if *m == 1 { l.clone() } else { format!("{m}{l}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
