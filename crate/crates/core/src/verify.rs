//! Verification harness: named suites of exact identity checks, each
//! producing a [`VerificationReport`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    antisymmetrizer, inequivalence_check_with, primitivity_check_with, symmetrizer,
    symmetrizer_recursion_check, young_operator, AlgebraElement, PolyAlgebraElement, Rational,
};
use crate::config::Limits;
use crate::hermitian::{hermitian_young, sandwich_with_ancestor};
use crate::polynomial::Polynomial;
use crate::tableaux::{enumerate_syt_with, YoungTableau};
use crate::tensor::{orthogonality_report, TensorOperator};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Idempotency,
    Primitivity,
    ConventionalTransversality,
    Transversality,
    Hermiticity,
    Completeness,
    TracePolynomials,
    PartialTrace,
    Tensor,
    Littlewood,
    Shortcuts,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Idempotency,
        Suite::Primitivity,
        Suite::ConventionalTransversality,
        Suite::Transversality,
        Suite::Hermiticity,
        Suite::Completeness,
        Suite::TracePolynomials,
        Suite::PartialTrace,
        Suite::Tensor,
        Suite::Littlewood,
        Suite::Shortcuts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Idempotency => "idempotency",
            Suite::Primitivity => "primitivity",
            Suite::ConventionalTransversality => "conventional-transversality",
            Suite::Transversality => "transversality",
            Suite::Hermiticity => "hermiticity",
            Suite::Completeness => "completeness",
            Suite::TracePolynomials => "trace-polynomials",
            Suite::PartialTrace => "partial-trace",
            Suite::Tensor => "tensor",
            Suite::Littlewood => "littlewood",
            Suite::Shortcuts => "shortcuts",
        }
    }

    /// Suites run when none are named explicitly.
    pub fn defaults(n: usize, limits: &Limits) -> Vec<Suite> {
        Suite::ALL
            .into_iter()
            .filter(|s| match s {
                Suite::ConventionalTransversality => false,
                Suite::Littlewood | Suite::Shortcuts => n >= 5,
                Suite::Primitivity => n <= limits.check_max_n,
                _ => true,
            })
            .collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Evidence attached to a failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Pair { left: String, right: String },
    Tableau { tableau: String, detail: String },
    Permutation { perm: Vec<usize>, detail: String },
    Entry { dim: usize, row: usize, col: usize, expected: String, actual: String, context: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    /// The identity being checked.
    pub anchor: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    fn new(id: impl Into<String>, anchor: &str, failure: Option<Witness>) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.to_string(),
            passed: failure.is_none(),
            witness: failure,
        }
    }

    fn expect(id: impl Into<String>, anchor: &str, ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        Check::new(id, anchor, if ok { None } else { Some(witness()) })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    fn assemble(suite: Suite, n: usize, mut checks: Vec<Check>, started: Instant) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.passed).count();
        VerificationReport {
            suite: suite.name().to_string(),
            n,
            summary: Summary {
                total: checks.len(),
                passed,
                failed: checks.len() - passed,
            },
            checks,
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n: usize,
    pub dims: Vec<usize>,
    pub suites: Vec<Suite>,
    pub limits: Limits,
}

impl VerifyOptions {
    pub fn new(n: usize) -> Self {
        let limits = Limits::default();
        VerifyOptions {
            n,
            dims: vec![2, 3],
            suites: Suite::defaults(n, &limits),
            limits,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRun {
    pub n: usize,
    pub dims: Vec<usize>,
    pub reports: Vec<VerificationReport>,
}

impl VerificationRun {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::all_passed)
    }

    pub fn report(&self, suite: Suite) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| r.suite == suite.name())
    }
}

/// Runs the selected suites concurrently; reports come back in suite order.
pub fn run_verification(opts: &VerifyOptions) -> Result<VerificationRun> {
    opts.limits.check_n(opts.n)?;
    let mut suites = opts.suites.clone();
    suites.sort();
    suites.dedup();
    let syt = enumerate_syt_with(opts.n, &opts.limits)?;
    let reports = suites
        .par_iter()
        .map(|&suite| run_suite(suite, opts, &syt))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationRun {
        n: opts.n,
        dims: opts.dims.clone(),
        reports,
    })
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions, syt: &[YoungTableau]) -> Result<VerificationReport> {
    let started = Instant::now();
    let checks = match suite {
        Suite::Idempotency => idempotency(syt)?,
        Suite::Primitivity => primitivity(syt, &opts.limits)?,
        Suite::ConventionalTransversality => pairwise(syt, Kind::Conventional)?,
        Suite::Transversality => pairwise(syt, Kind::Hermitian)?,
        Suite::Hermiticity => hermiticity(syt)?,
        Suite::Completeness => completeness(opts.n, syt)?,
        Suite::TracePolynomials => trace_polynomials(syt)?,
        Suite::PartialTrace => partial_traces(opts.n, syt)?,
        Suite::Tensor => tensor_checks(syt, &opts.dims, &opts.limits)?,
        Suite::Littlewood => littlewood()?,
        Suite::Shortcuts => shortcuts()?,
    };
    Ok(VerificationReport::assemble(suite, opts.n, checks, started))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Conventional,
    Hermitian,
}

impl Kind {
    fn symbol(self) -> &'static str {
        match self {
            Kind::Conventional => "Y",
            Kind::Hermitian => "P",
        }
    }

    pub fn build(self, t: &YoungTableau) -> Result<AlgebraElement> {
        match self {
            Kind::Conventional => young_operator(t),
            Kind::Hermitian => hermitian_young(t).map(|p| (*p).clone()),
        }
    }
}

fn tableau_witness(t: &YoungTableau, detail: impl Into<String>) -> Witness {
    Witness::Tableau {
        tableau: t.to_string(),
        detail: detail.into(),
    }
}

fn build_all(syt: &[YoungTableau], kind: Kind) -> Result<Vec<AlgebraElement>> {
    syt.par_iter().map(|t| kind.build(t)).collect()
}

fn idempotency(syt: &[YoungTableau]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for kind in [Kind::Conventional, Kind::Hermitian] {
        let ops = build_all(syt, kind)?;
        for (t, op) in syt.iter().zip(&ops) {
            let sym = kind.symbol();
            checks.push(Check::expect(
                format!("{sym}[{t}]^2"),
                &format!("{sym}_T^2 = {sym}_T"),
                op.is_idempotent(),
                || tableau_witness(t, format!("{sym}_T^2 differs from {sym}_T")),
            ));
        }
    }
    Ok(checks)
}

fn primitivity(syt: &[YoungTableau], limits: &Limits) -> Result<Vec<Check>> {
    let ys = build_all(syt, Kind::Conventional)?;
    let mut checks = Vec::new();
    for (t, y) in syt.iter().zip(&ys) {
        checks.push(Check::expect(
            format!("primitive[{t}]"),
            "Y_T σ Y_T ∈ C·Y_T for all σ",
            primitivity_check_with(y, limits)?,
            || tableau_witness(t, "Y_T is not primitive"),
        ));
    }
    for (i, a) in syt.iter().enumerate() {
        for (j, b) in syt.iter().enumerate().skip(i + 1) {
            let inequivalent = inequivalence_check_with(&ys[i], &ys[j], limits)?;
            checks.push(Check::expect(
                format!("inequivalent[{a},{b}]"),
                "Y_T σ Y_S = 0 for all σ iff shapes differ",
                inequivalent == (a.shape() != b.shape()),
                || Witness::Pair {
                    left: a.to_string(),
                    right: b.to_string(),
                },
            ));
        }
    }
    Ok(checks)
}

/// `X_T X_S = δ_TS X_T` over all ordered pairs.
fn pairwise(syt: &[YoungTableau], kind: Kind) -> Result<Vec<Check>> {
    let ops = build_all(syt, kind)?;
    let sym = kind.symbol();
    let anchor = format!("{sym}_T·{sym}_S = δ_TS·{sym}_T");
    let n = syt.first().map_or(1, YoungTableau::n);
    let zero = AlgebraElement::zero(n);
    let pairs: Vec<(usize, usize)> = (0..syt.len())
        .flat_map(|i| (0..syt.len()).map(move |j| (i, j)))
        .collect();
    Ok(pairs
        .par_iter()
        .map(|&(i, j)| {
            let product = &ops[i] * &ops[j];
            let expected = if i == j { &ops[i] } else { &zero };
            Check::expect(
                format!("{sym}[{}]·{sym}[{}]", syt[i], syt[j]),
                &anchor,
                &product == expected,
                || Witness::Pair {
                    left: syt[i].to_string(),
                    right: syt[j].to_string(),
                },
            )
        })
        .collect())
}

fn hermiticity(syt: &[YoungTableau]) -> Result<Vec<Check>> {
    let ps = build_all(syt, Kind::Hermitian)?;
    Ok(syt
        .iter()
        .zip(&ps)
        .map(|(t, p)| {
            Check::expect(format!("P[{t}]*"), "P_T* = P_T", p.involution() == *p, || {
                tableau_witness(t, "involution changes P_T")
            })
        })
        .collect())
}

fn completeness(n: usize, syt: &[YoungTableau]) -> Result<Vec<Check>> {
    let ps = build_all(syt, Kind::Hermitian)?;
    let sum = ps.iter().fold(AlgebraElement::zero(n), |acc, p| &acc + p);
    let mut checks = vec![Check::expect(
        format!("sum-P[n={n}]"),
        "Σ_T P_T = e",
        sum == AlgebraElement::identity(n),
        || Witness::Permutation {
            perm: sum
                .terms()
                .find(|(p, c)| !(p.is_identity() && **c == Rational::from_integer(1.into())))
                .map(|(p, _)| p.one_line())
                .unwrap_or_else(|| (1..=n).collect()),
            detail: "first term of Σ P_T not matching e".into(),
        },
    )];
    if n == 3 {
        let t = |s: &str| s.parse::<YoungTableau>().unwrap();
        let lhs = &*hermitian_young(&t("12/3"))? + &*hermitian_young(&t("13/2"))?;
        let rhs = &young_operator(&t("12/3"))? + &young_operator(&t("13/2"))?;
        checks.push(Check::expect(
            "sum-P[12/3,13/2]",
            "P_{12/3} + P_{13/2} = Y_{12/3} + Y_{13/2}",
            lhs == rhs,
            || Witness::Pair {
                left: "12/3".into(),
                right: "13/2".into(),
            },
        ));
    }
    Ok(checks)
}

fn trace_polynomials(syt: &[YoungTableau]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for t in syt {
        let expected = t.shape().dimension_ratio();
        for kind in [Kind::Conventional, Kind::Hermitian] {
            let sym = kind.symbol();
            let actual = kind.build(t)?.trace_polynomial();
            checks.push(Check::expect(
                format!("tr {sym}[{t}]"),
                &format!("tr {sym}_T = f_T(N)/|T|"),
                actual == expected,
                || tableau_witness(t, format!("trace {actual} ≠ {expected}")),
            ));
        }
    }
    Ok(checks)
}

/// `tr' X_T = (N + p − q)·|T'|/|T|·X_{T'}` as a polynomial identity.
pub fn partial_trace_rhs(t: &YoungTableau, kind: Kind) -> Result<PolyAlgebraElement> {
    let parent = t.parent()?;
    let ratio = Rational::new(
        BigInt::from(parent.tableau.shape().hook_product()),
        BigInt::from(t.shape().hook_product()),
    );
    let factor = Polynomial::linear(Rational::from_integer(BigInt::from(
        parent.p as i64 - parent.q as i64,
    )))
    .scale(&ratio);
    Ok(PolyAlgebraElement::scaled(&factor, &kind.build(&parent.tableau)?))
}

fn partial_traces(n: usize, syt: &[YoungTableau]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    if n < 2 {
        return Ok(checks);
    }
    for t in syt {
        for kind in [Kind::Conventional, Kind::Hermitian] {
            let sym = kind.symbol();
            let ok = kind.build(t)?.partial_trace()? == partial_trace_rhs(t, kind)?;
            checks.push(Check::expect(
                format!("tr' {sym}[{t}]"),
                &format!("tr' {sym}_T = (N+p−q)·|T'|/|T|·{sym}_T'"),
                ok,
                || tableau_witness(t, "partial trace recursion violated"),
            ));
        }
    }
    for k in 2..=n {
        checks.push(Check::expect(
            format!("recursion[k={k}]"),
            "S_{1..k} = (1/k)S_{2..k} + ((k−1)/k)S_{2..k}(12)S_{2..k}, antisymmetric analogue with −",
            symmetrizer_recursion_check(n, k)?,
            || Witness::Permutation {
                perm: (1..=k).collect(),
                detail: format!("recursion fails for k = {k}"),
            },
        ));
    }
    Ok(checks)
}

fn entry_witness(dim: usize, w: crate::tensor::EntryWitness, context: String) -> Witness {
    Witness::Entry {
        dim,
        row: w.row,
        col: w.col,
        expected: w.expected,
        actual: w.actual,
        context,
    }
}

fn tensor_checks(syt: &[YoungTableau], dims: &[usize], limits: &Limits) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let ps = build_all(syt, Kind::Hermitian)?;
    let ys = build_all(syt, Kind::Conventional)?;
    for &dim in dims {
        let mats = ps
            .par_iter()
            .map(|p| TensorOperator::realize_with(p, dim, limits))
            .collect::<Result<Vec<_>>>()?;
        let report = orthogonality_report(&mats)?;
        for c in report.checks {
            checks.push(Check::new(
                format!("N={dim} {}", c.id),
                "D(P_T) D(P_S) = δ_TS D(P_T), D(P_T)ᵀ = D(P_T), Σ D(P_T) = 1",
                c.witness.map(|w| entry_witness(dim, w, format!("orthogonality {}", c.id))),
            ));
        }
        let per_tableau: Vec<Vec<Check>> = syt
            .par_iter()
            .zip(mats.par_iter())
            .zip(ys.par_iter().zip(ps.par_iter()))
            .map(|((t, m), (y, p))| -> Result<Vec<Check>> {
                let expected_dim = Rational::from_integer(BigInt::from(t.shape().dimension(dim as u64)));
                let trace = m.trace();
                let rank = m.rank();
                let mut out = vec![
                    Check::expect(
                        format!("N={dim} tr D(P[{t}])"),
                        "tr D(P_T) = f_T(N)/|T|",
                        trace == expected_dim,
                        || tableau_witness(t, format!("trace {trace} ≠ {expected_dim}")),
                    ),
                    Check::expect(
                        format!("N={dim} rank D(P[{t}])"),
                        "rank D(P_T) = f_T(N)/|T|",
                        Rational::from_integer(BigInt::from(rank)) == expected_dim,
                        || tableau_witness(t, format!("rank {rank} ≠ {expected_dim}")),
                    ),
                    Check::expect(
                        format!("N={dim} tr D(P[{t}]) = tr-poly"),
                        "tr D(A) = trace_polynomial(A)(N)",
                        trace == p.trace_polynomial().eval(&Rational::from_integer(BigInt::from(dim))),
                        || tableau_witness(t, "matrix trace differs from trace polynomial"),
                    ),
                ];
                let my = TensorOperator::realize_with(y, dim, limits)?;
                let adj = TensorOperator::realize_with(&y.involution(), dim, limits)?;
                out.push(Check::new(
                    format!("N={dim} D(Y[{t}])ᵀ"),
                    "D(A)ᵀ = D(A*)",
                    my.transpose()
                        .first_difference(&adj)
                        .map(|w| entry_witness(dim, w, format!("adjoint of Y[{t}]"))),
                ));
                if t.n() >= 2 {
                    for (kind, mat, elem) in [(Kind::Conventional, &my, y), (Kind::Hermitian, m, p)] {
                        let sym = kind.symbol();
                        let algebraic = TensorOperator::realize_poly(&elem.partial_trace()?, dim)?;
                        let recursion = TensorOperator::realize_poly(&partial_trace_rhs(t, kind)?, dim)?;
                        let traced = mat.partial_trace()?;
                        out.push(Check::new(
                            format!("N={dim} tr' D({sym}[{t}])"),
                            "tr'∘D = D∘tr'",
                            traced
                                .first_difference(&algebraic)
                                .map(|w| entry_witness(dim, w, format!("partial trace of {sym}[{t}]"))),
                        ));
                        out.push(Check::new(
                            format!("N={dim} tr' D({sym}[{t}]) recursion"),
                            "tr' D(X_T) = (N+p−q)·|T'|/|T|·D(X_T')",
                            traced
                                .first_difference(&recursion)
                                .map(|w| entry_witness(dim, w, format!("recursion for {sym}[{t}]"))),
                        ));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        checks.extend(per_tableau.into_iter().flatten());
    }
    Ok(checks)
}

fn fixed(s: &str) -> YoungTableau {
    s.parse().expect("fixed tableau literal")
}

fn littlewood() -> Result<Vec<Check>> {
    let (a, b) = (fixed("123/45"), fixed("135/24"));
    let (ya, yb) = (young_operator(&a)?, young_operator(&b)?);
    let (pa, pb) = (hermitian_young(&a)?, hermitian_young(&b)?);
    let pair = || Witness::Pair {
        left: a.to_string(),
        right: b.to_string(),
    };
    let two = Rational::from_integer(2.into());
    let s = |v: &[usize]| symmetrizer(5, v);
    let an = |v: &[usize]| antisymmetrizer(5, v);
    let form_a = (&(&(&s(&[1, 2, 3])? * &s(&[4, 5])?) * &an(&[1, 4])?) * &an(&[2, 5])?).scale(&two);
    let form_b = (&(&(&s(&[1, 3, 5])? * &s(&[2, 4])?) * &an(&[1, 2])?) * &an(&[3, 4])?).scale(&two);

    let syt = enumerate_syt_with(5, &Limits::default())?;
    let failing: Vec<(String, String)> = pairwise(&syt, Kind::Conventional)?
        .into_iter()
        .filter(|c| !c.passed)
        .filter_map(|c| match c.witness {
            Some(Witness::Pair { left, right }) => Some((left, right)),
            _ => None,
        })
        .collect();
    let mut expected_failures = vec![
        ("123/45".to_string(), "135/24".to_string()),
        ("12/34/5".to_string(), "14/25/3".to_string()),
    ];
    expected_failures.sort();
    let mut sorted_failures = failing.clone();
    sorted_failures.sort();

    Ok(vec![
        Check::expect("Y[135/24]·Y[123/45]", "Y_{135/24} Y_{123/45} = 0", (&yb * &ya).is_zero(), pair),
        Check::expect("Y[123/45]·Y[135/24]", "Y_{123/45} Y_{135/24} ≠ 0", !(&ya * &yb).is_zero(), pair),
        Check::expect(
            "Y[123/45] product form",
            "Y_{123/45} = 2·S{123}S{45}A{14}A{25}",
            ya == form_a,
            || tableau_witness(&a, "product form mismatch"),
        ),
        Check::expect(
            "Y[135/24] product form",
            "Y_{135/24} = 2·S{135}S{24}A{12}A{34}",
            yb == form_b,
            || tableau_witness(&b, "product form mismatch"),
        ),
        Check::expect(
            "conventional failures n=5",
            "Y_T Y_S ≠ δ_TS Y_T only for 123/45·135/24 and its conjugate 12/34/5·14/25/3",
            sorted_failures == expected_failures,
            || Witness::Pair {
                left: format!("{failing:?}"),
                right: format!("{expected_failures:?}"),
            },
        ),
        Check::expect("P[123/45]·P[135/24]", "P_{123/45} P_{135/24} = 0", (&*pa * &*pb).is_zero(), pair),
        Check::expect("P[135/24]·P[123/45]", "P_{135/24} P_{123/45} = 0", (&*pb * &*pa).is_zero(), pair),
    ])
}

fn shortcuts() -> Result<Vec<Check>> {
    let t = fixed("123/45");
    let u = fixed("13/24");
    let v = fixed("135/24");
    let p_t = hermitian_young(&t)?;
    let p_u = hermitian_young(&u)?;
    let y_v = young_operator(&v)?;
    let half = Rational::new(1.into(), 2.into());
    let quarter = Rational::new(1.into(), 4.into());
    let half_y = y_v.scale(&half);
    Ok(vec![
        Check::expect(
            "shortcut P[123/45]",
            "(P_{123} ⊗ 1⊗1) Y_{123/45} (P_{123} ⊗ 1⊗1) = P_{123/45}",
            sandwich_with_ancestor(&t, &fixed("123"))? == *p_t,
            || tableau_witness(&t, "shortcut sandwich differs from full recursion"),
        ),
        Check::expect(
            "shortcut P[13/24]",
            "(P_{1/2} ⊗ 1⊗1) Y_{13/24} (P_{1/2} ⊗ 1⊗1) = P_{13/24}",
            sandwich_with_ancestor(&u, &fixed("1/2"))? == *p_u,
            || tableau_witness(&u, "shortcut sandwich differs from full recursion"),
        ),
        Check::expect(
            "recursion P[135/24] via 13/24",
            "(P_{13/24} ⊗ 1) Y_{135/24} (P_{13/24} ⊗ 1) = P_{135/24}",
            sandwich_with_ancestor(&v, &u)? == *hermitian_young(&v)?,
            || tableau_witness(&v, "recursion via 13/24 differs"),
        ),
        Check::expect(
            "square (1/2)Y[135/24]",
            "((1/2) Y_{135/24})^2 = (1/4) Y_{135/24}",
            &half_y * &half_y == y_v.scale(&quarter),
            || tableau_witness(&v, "squaring identity fails"),
        ),
        Check::expect(
            "P[123/45] hermitian idempotent",
            "P_{123/45}* = P_{123/45} = P_{123/45}^2",
            p_t.involution() == *p_t && p_t.is_idempotent(),
            || tableau_witness(&t, "not a Hermitian idempotent"),
        ),
    ])
}
