//! Serializable per-triangle reports.
//!
//! Every rational is written as a [`RationalRecord`]: the exact `"p/q"` string
//! (lowest terms, sign on the numerator, integers without a denominator) and
//! a decimal approximation that is only there for convenience.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, Certificate, InequalityId, WeightTriple};
use crate::centers::{center, center_mass, CenterId};
use crate::eld::{self, EldQuadratic, IdentityCheck};
use crate::error::Result;
use crate::planar::{PlanarFrame, Xy};
use crate::scalar::{exact, parse_rational, Exact, Scalar, Tolerance};
use crate::ExactTriangle;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalRecord {
    pub exact: String,
    pub decimal: f64,
}

impl RationalRecord {
    pub fn new(x: &Exact) -> Self {
        RationalRecord { exact: x.to_string(), decimal: x.approx() }
    }

    pub fn value(&self) -> Result<Exact> {
        parse_rational(&self.exact)
    }
}

impl From<&Exact> for RationalRecord {
    fn from(x: &Exact) -> Self {
        RationalRecord::new(x)
    }
}

fn rec(x: &Exact) -> RationalRecord {
    RationalRecord::new(x)
}

fn rec3(xs: &[Exact; 3]) -> [RationalRecord; 3] {
    [rec(&xs[0]), rec(&xs[1]), rec(&xs[2])]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangleRecord {
    pub a: RationalRecord,
    pub b: RationalRecord,
    pub c: RationalRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantsRecord {
    pub s: RationalRecord,
    pub s2: RationalRecord,
    pub area_sq: RationalRecord,
    pub big_r2: RationalRecord,
    pub r2: RationalRecord,
    pub rr: RationalRecord,
    /// Conway symbols `[S_A, S_B, S_C]`.
    pub conway: [RationalRecord; 3],
    /// Irrational lengths, floating point only.
    pub area: f64,
    pub big_r: f64,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CenterRecord {
    pub etc: u32,
    pub symbol: String,
    pub homogeneous: [RationalRecord; 3],
    pub normalized: [RationalRecord; 3],
    /// Embedding with `B = (0,0)`, `C = (a,0)` and `A` in the upper half plane.
    pub cartesian: Xy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub label: String,
    pub factor: RationalRecord,
    pub p: [RationalRecord; 3],
    pub q: [RationalRecord; 3],
    pub dist2: RationalRecord,
    pub metric: RationalRecord,
    pub residual: RationalRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedRecord {
    pub label: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub name: InequalityId,
    pub slack: RationalRecord,
    pub hypotheses_hold: bool,
    pub exact: bool,
    pub witnesses: Vec<WitnessRecord>,
    pub skipped: Vec<SkippedRecord>,
}

impl From<&Certificate<Exact>> for CertificateRecord {
    fn from(c: &Certificate<Exact>) -> Self {
        CertificateRecord {
            name: c.name,
            slack: rec(&c.analytic),
            hypotheses_hold: c.hypotheses_hold,
            exact: c.is_exact(),
            witnesses: c
                .witnesses
                .iter()
                .map(|w| WitnessRecord {
                    label: w.label.to_string(),
                    factor: rec(&w.factor),
                    p: rec3(w.p.coords()),
                    q: rec3(w.q.coords()),
                    dist2: rec(&w.dist2),
                    metric: rec(&w.metric),
                    residual: rec(&w.residual),
                })
                .collect(),
            skipped: c.skipped.iter().map(|s| SkippedRecord { label: s.label.to_string(), reason: s.reason.clone() }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadraticRecord {
    /// `a·λ² + b·λ + c`.
    pub a: RationalRecord,
    pub b: RationalRecord,
    pub c: RationalRecord,
    pub vertex: Option<RationalRecord>,
    pub min: RationalRecord,
}

impl From<&EldQuadratic<Exact>> for QuadraticRecord {
    fn from(q: &EldQuadratic<Exact>) -> Self {
        QuadraticRecord {
            a: rec(&q.a),
            b: rec(&q.b),
            c: rec(&q.c),
            vertex: q.vertex().as_ref().map(rec),
            min: rec(&q.min_value()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EldSample {
    pub lambda: RationalRecord,
    pub eld_i: RationalRecord,
    pub eld_m: RationalRecord,
    /// The classical inequality `ELD_I(λ) ≥ 0` encodes at this `λ`, if any.
    pub encodes: Option<InequalityId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub name: String,
    pub lhs: RationalRecord,
    pub rhs: RationalRecord,
    pub holds: bool,
}

impl From<&IdentityCheck<Exact>> for IdentityRecord {
    fn from(c: &IdentityCheck<Exact>) -> Self {
        IdentityRecord { name: c.name.to_string(), lhs: rec(&c.lhs), rhs: rec(&c.rhs), holds: c.holds() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxisRecord {
    pub lambda_star: RationalRecord,
    pub in_range: bool,
    /// `[ELD_I(2), ELD_I(1), ELD_I(2/3)]`.
    pub chain: [RationalRecord; 3],
    pub chain_monotone: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpenedRecord {
    pub name: InequalityId,
    pub value: RationalRecord,
    pub bound: RationalRecord,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EldRecord {
    pub d_i: RationalRecord,
    pub fundamental_bound: RationalRecord,
    pub oh_sq: RationalRecord,
    pub hm_sq: RationalRecord,
    pub kooi_star: RationalRecord,
    pub incenter: QuadraticRecord,
    pub mittenpunkt: QuadraticRecord,
    pub samples: Vec<EldSample>,
    /// Absent for the equilateral triangle, where `ELD_I` is identically zero.
    pub axis: Option<AxisRecord>,
    pub sharpened: Vec<SharpenedRecord>,
    pub identities: Vec<IdentityRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlundonRecord {
    pub lower: f64,
    pub upper: f64,
    pub s2: RationalRecord,
    pub contains: bool,
    pub collapsed: bool,
    pub fundamental: RationalRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub triangle: TriangleRecord,
    pub weights: [RationalRecord; 3],
    pub invariants: InvariantsRecord,
    pub centers: BTreeMap<String, CenterRecord>,
    pub certificates: Vec<CertificateRecord>,
    pub eld: EldRecord,
    pub blundon: BlundonRecord,
    /// Names of certificates with a nonzero residual and identities that
    /// failed. Empty in every correct report.
    pub failures: Vec<String>,
}

impl Report {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn certificate(&self, name: InequalityId) -> Option<&CertificateRecord> {
        self.certificates.iter().find(|c| c.name == name)
    }

    pub fn eld_sample(&self, lambda: &Exact) -> Option<&EldSample> {
        self.eld.samples.iter().find(|s| s.lambda.value().ok().as_ref() == Some(lambda))
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub weights: WeightTriple<Exact>,
    /// Pole of the Klamkin moment.
    pub klamkin_point: CenterId,
    /// Second triangle for Neuberg–Pedoe; the triangle itself when absent.
    pub other: Option<ExactTriangle>,
    /// Extra `λ` values beyond `0, 2/3, 1, 2`.
    pub lambdas: Vec<Exact>,
    pub tol: Tolerance,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            weights: WeightTriple::ones(),
            klamkin_point: CenterId::Centroid,
            other: None,
            lambdas: Vec::new(),
            tol: Tolerance::default(),
        }
    }
}

/// `λ` values where `ELD_I(λ) ≥ 0` is a named classical inequality.
pub fn classical_lambda(lambda: &Exact) -> Option<InequalityId> {
    [
        (exact(0, 1), InequalityId::GerretsenUpper),
        (exact(2, 3), InequalityId::GerretsenLower),
        (exact(1, 1), InequalityId::Euler),
        (exact(2, 1), InequalityId::FinslerHadwiger),
    ]
    .into_iter()
    .find(|(l, _)| l == lambda)
    .map(|(_, id)| id)
}

/// `ELD_I` and `ELD_M` at each `λ`.
pub fn eld_table(t: &ExactTriangle, lambdas: &[Exact]) -> Vec<EldSample> {
    lambdas
        .iter()
        .map(|l| EldSample {
            lambda: rec(l),
            eld_i: rec(&eld::eld_i(t, l)),
            eld_m: rec(&eld::eld_m(t, l)),
            encodes: classical_lambda(l),
        })
        .collect()
}

pub fn build_report(t: &ExactTriangle, opts: &ReportOptions) -> Result<Report> {
    let inv = eld::SrrInvariants::of(t);
    let len = inv.lengths(opts.tol);
    let conway = t.conway();
    let frame = PlanarFrame::from_triangle(t);
    let w = &opts.weights;

    let centers = CenterId::ALL
        .iter()
        .map(|&id| {
            let p = center(t, id);
            let record = CenterRecord {
                etc: id.etc_index(),
                symbol: id.symbol().to_string(),
                homogeneous: rec3(&center_mass(t, id)),
                normalized: rec3(p.coords()),
                cartesian: frame.embed(&p),
            };
            (id.to_string(), record)
        })
        .collect();

    let mut certs = vec![
        catalog::quadratic_form(t, w)?,
        catalog::wolstenholme(t, w)?,
        catalog::garfunkel_bankoff(t)?,
        catalog::kooi(t, w)?,
        catalog::oppenheim(t, w)?,
        catalog::neuberg_pedoe(t, opts.other.as_ref().unwrap_or(t))?,
        catalog::klamkin(t, w, &center(t, opts.klamkin_point))?,
        catalog::weitzenbock(t)?,
    ];
    certs.extend(eld::classical_via_eld(t));
    let kooi_star = eld::kooi_star(t);
    certs.push(kooi_star.clone());

    let mut identities: Vec<IdentityCheck<Exact>> = eld::eld_i_identities(t);
    identities.extend(eld::eld_m_identities(t));
    let cor = eld::eld_corollaries(t);
    identities.extend(cor.identities().into_iter().cloned());
    let axis = eld::axis_of_symmetry(t).ok();
    if let Some(a) = &axis {
        identities.push(a.lower_decomposition.clone());
        identities.push(a.upper_decomposition.clone());
    }

    let mut failures: Vec<String> =
        certs.iter().filter(|c| !c.is_exact()).map(|c| c.name.to_string()).collect();
    failures.extend(identities.iter().filter(|c| !c.holds()).map(|c| c.name.to_string()));

    let mut lambdas = vec![exact(0, 1), exact(2, 3), exact(1, 1), exact(2, 1)];
    for l in &opts.lambdas {
        if !lambdas.contains(l) {
            lambdas.push(l.clone());
        }
    }

    let h = center(t, CenterId::Orthocenter);
    let m = center(t, CenterId::Mittenpunkt);
    let blundon = eld::blundon_interval(t, opts.tol);
    let eld_record = EldRecord {
        d_i: rec(&eld::d_i(t)),
        fundamental_bound: rec(&eld::fundamental_bound(t)),
        oh_sq: rec(&eld::oh_sq(&inv)),
        hm_sq: rec(&t.dist2(&h, &m)),
        kooi_star: rec(&kooi_star.analytic),
        incenter: (&eld::eld_i_quadratic(t)).into(),
        mittenpunkt: (&eld::eld_m_quadratic(t)).into(),
        samples: eld_table(t, &lambdas),
        axis: axis.as_ref().map(|a| AxisRecord {
            lambda_star: rec(&a.vertex),
            in_range: a.in_range(),
            chain: rec3(&a.chain),
            chain_monotone: a.chain_monotone(),
        }),
        sharpened: eld::sharpened(t)
            .iter()
            .chain(std::iter::once(&eld::kooi_star_sharpened(t)))
            .map(|b| SharpenedRecord { name: b.name, value: rec(&b.value), bound: rec(&b.bound), holds: b.holds() })
            .collect(),
        identities: identities.iter().map(IdentityRecord::from).collect(),
    };

    Ok(Report {
        triangle: TriangleRecord { a: rec(t.a()), b: rec(t.b()), c: rec(t.c()) },
        weights: rec3(&w.as_array()),
        invariants: InvariantsRecord {
            s: rec(&inv.s),
            s2: rec(&inv.s2),
            area_sq: rec(&inv.area_sq),
            big_r2: rec(&inv.big_r2),
            r2: rec(&inv.r2),
            rr: rec(&inv.rr),
            conway: rec3(&[conway.sa.clone(), conway.sb.clone(), conway.sc.clone()]),
            area: inv.area_sq.approx().sqrt(),
            big_r: len.big_r.value,
            r: len.r.value,
        },
        centers,
        certificates: certs.iter().map(CertificateRecord::from).collect(),
        eld: eld_record,
        blundon: BlundonRecord {
            lower: blundon.lower.value,
            upper: blundon.upper.value,
            s2: rec(&inv.s2),
            contains: blundon.contains,
            collapsed: blundon.collapsed,
            fundamental: rec(&blundon.fundamental),
        },
        failures,
    })
}

fn coords(p: &[RationalRecord; 3]) -> String {
    format!("[{}, {}, {}]", p[0].exact, p[1].exact, p[2].exact)
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.triangle;
        let inv = &self.invariants;
        writeln!(f, "triangle a = {}, b = {}, c = {}", t.a.exact, t.b.exact, t.c.exact)?;
        writeln!(
            f,
            "s = {}  S² = {}  R² = {}  r² = {}  Rr = {}",
            inv.s.exact, inv.area_sq.exact, inv.big_r2.exact, inv.r2.exact, inv.rr.exact
        )?;
        writeln!(f, "S ≈ {:.12}  R ≈ {:.12}  r ≈ {:.12}", inv.area, inv.big_r, inv.r)?;
        writeln!(f, "\ncenters (normalized barycentrics; Cartesian with B at the origin)")?;
        let mut centers: Vec<_> = self.centers.iter().collect();
        centers.sort_by_key(|(_, c)| c.etc);
        for (name, c) in centers {
            writeln!(
                f,
                "  X({:<1}) {:<3} {:<13} {}  ({:.9}, {:.9})",
                c.etc, c.symbol, name, coords(&c.normalized), c.cartesian.x, c.cartesian.y
            )?;
        }
        writeln!(f, "\ncertificates (slack = metric witness)")?;
        for c in &self.certificates {
            let status = if c.exact { "exact" } else { "RESIDUAL" };
            let hyp = if c.hypotheses_hold { "" } else { "  (hypotheses not met)" };
            writeln!(f, "  {:<18} slack {:<24} {status}{hyp}", c.name.as_str(), c.slack.exact)?;
            for w in &c.witnesses {
                writeln!(f, "      {:<26} {} · {}", w.label, w.factor.exact, w.dist2.exact)?;
            }
            for s in &c.skipped {
                writeln!(f, "      {:<26} skipped: {}", s.label, s.reason)?;
            }
        }
        let e = &self.eld;
        writeln!(f, "\nEuler line")?;
        writeln!(f, "  d_I = {}  |OH|² = {}  |HM|² = {}", e.d_i.exact, e.oh_sq.exact, e.hm_sq.exact)?;
        writeln!(f, "  fundamental bound = {}  kooi★ = {}", e.fundamental_bound.exact, e.kooi_star.exact)?;
        for (label, q) in [("ELD_I", &e.incenter), ("ELD_M", &e.mittenpunkt)] {
            writeln!(f, "  {label}(λ) = ({})λ² + ({})λ + ({})  min {}", q.a.exact, q.b.exact, q.c.exact, q.min.exact)?;
        }
        if let Some(a) = &e.axis {
            writeln!(f, "  λ* = {}", a.lambda_star.exact)?;
        }
        writeln!(f, "  {:<10} {:<20} {:<20} encodes", "λ", "ELD_I", "ELD_M")?;
        for s in &e.samples {
            let encodes = s.encodes.map(InequalityId::as_str).unwrap_or("");
            writeln!(f, "  {:<10} {:<20} {:<20} {encodes}", s.lambda.exact, s.eld_i.exact, s.eld_m.exact)?;
        }
        let b = &self.blundon;
        writeln!(
            f,
            "\nBlundon  {:.12} ≤ s² = {} ≤ {:.12}  {}",
            b.lower,
            b.s2.exact,
            b.upper,
            if b.contains { "holds" } else { "VIOLATED" }
        )?;
        if self.failures.is_empty() {
            write!(f, "\nall residuals zero")
        } else {
            write!(f, "\nfailures: {}", self.failures.join(", "))
        }
    }
}

/// Comma-separated weight triple with a nonzero sum.
pub fn parse_weights(text: &str) -> Result<WeightTriple<Exact>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(crate::GeometryError::Parse(format!("expected three comma-separated weights, got {text:?}")));
    };
    let w = WeightTriple::new(parse_rational(x)?, parse_rational(y)?, parse_rational(z)?);
    if w.sum().is_zero() {
        return Err(crate::GeometryError::ZeroWeightSum);
    }
    Ok(w)
}

/// Comma-separated `λ` list.
pub fn parse_lambdas(text: &str) -> Result<Vec<Exact>> {
    text.split(',').map(|s| parse_rational(s.trim())).collect()
}
