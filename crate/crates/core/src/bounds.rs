//! Upper and lower bounds on the number of equiangular lines, and the tables
//! of known values assembled from them.

use crate::constructions::{build, extend_system, systems_in_dimension, ExtendOptions};
use crate::error::{BoundsError, ConstructionError};
use crate::linalg::psd_rank;
use crate::nonexistence::{improved_relative_bound, theorem_nonex_certificate, Verdict};
use crate::algebraic::AlgebraicNumber;
use crate::spectra::{enumerate_feasible_spectra, Existence, FeasibleSpectrum, Spectrum};
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

pub use crate::constructions::{corollary_newthm_lower, corollary_s2t1_lower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbsoluteBound {
    pub value: u64,
    /// Equality needs `d = 2, 3` or `d + 2` an odd square.
    pub equality_possible: bool,
}

/// `d(d+1)/2`.
pub fn absolute_bound(d: usize) -> Result<AbsoluteBound, BoundsError> {
    if d < 2 {
        return Err(BoundsError::DimensionTooSmall(d));
    }
    let s = d as u64 + 2;
    let r = s.sqrt();
    let equality_possible = d <= 3 || (r * r == s && r % 2 == 1);
    Ok(AbsoluteBound { value: (d * (d + 1) / 2) as u64, equality_possible })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelativeBound {
    pub value: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub exact: BigRational,
    /// The exact bound is an integer. Only Seidel matrices with exactly two
    /// eigenvalues reach it.
    pub equality_possible: bool,
}

fn ser_ratio<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// `floor(d(1 - α²)/(1 - dα²))`, valid for `0 < α <= 1/sqrt(d + 2)`.
pub fn relative_bound(d: usize, alpha: &BigRational) -> Result<RelativeBound, BoundsError> {
    if d < 2 {
        return Err(BoundsError::DimensionTooSmall(d));
    }
    let a2 = alpha * alpha;
    let dd = BigRational::from_integer(BigInt::from(d));
    if !alpha.is_positive() || &a2 * (&dd + BigRational::from_integer(2.into())) > BigRational::one() {
        return Err(BoundsError::AngleOutOfRange);
    }
    let one = BigRational::one();
    let exact = &dd * (&one - &a2) / (&one - &dd * &a2);
    let value = exact.floor().to_integer().to_u64().expect("bounded by d(d+1)/2");
    Ok(RelativeBound { value, equality_possible: exact.is_integer(), exact })
}

fn inv(k: i64) -> BigRational {
    BigRational::new(1.into(), k.into())
}

/// Relative bound at angle `1/k`.
pub fn relative_bound_at(d: usize, k: i64) -> Result<RelativeBound, BoundsError> {
    relative_bound(d, &inv(k))
}

/// Neumann's restriction: `n > 2d` lines force `1/α` to be an odd integer.
pub fn neumann_filter(n: usize, d: usize, alpha: &BigRational) -> bool {
    if n <= 2 * d {
        return true;
    }
    let r = alpha.recip();
    r.is_integer() && r.to_integer().is_odd()
}

/// The companion spectral restriction: an even eigenvalue of a Seidel matrix is simple.
pub fn even_eigenvalue_filter(spec: &Spectrum) -> bool {
    spec.pairs().iter().all(|(x, m)| !matches!(x, AlgebraicNumber::Int(v) if v % 2 == 0) || *m == 1)
}

/// For `d <= 7` every odd `1/α` lies in the range of the relative bound, so
/// Neumann's restriction leaves `max(2d, relative bound at 1/3)`.
pub fn neumann_relative_bound(d: usize) -> Option<u64> {
    if !(2..=7).contains(&d) {
        return None;
    }
    Some(relative_bound_at(d, 3).ok()?.value.max(2 * d as u64))
}

// ---- tables ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Count {
    Exact(u64),
    Symbolic(String),
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Exact(v) => write!(f, "{v}"),
            Count::Symbolic(s) => f.write_str(s),
        }
    }
}

/// Something the repository can rerun to confirm a table entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A named construction; see [`crate::constructions::CATALOG`].
    Build { name: String },
    /// Some switching class of order `n` with smallest eigenvalue -5 embeds in dimension `d`.
    Search { n: usize, d: usize },
    /// No switching class of order `n` with smallest eigenvalue -5 embeds in dimension `d`.
    SearchEmpty { n: usize, d: usize },
    /// Adding `count` lines to the named construction stays in dimension `d`.
    Extend { name: String, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub count: Count,
    pub provenance: String,
    /// Shown instead of the count when the entry depends on `d`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Entry {
    fn exact(v: u64, provenance: impl Into<String>) -> Self {
        Entry { count: Count::Exact(v), provenance: provenance.into(), formula: None, witness: None }
    }

    fn with_formula(mut self, f: &str) -> Self {
        self.formula = Some(f.to_string());
        self
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn cell(&self) -> String {
        self.formula.clone().unwrap_or_else(|| self.count.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundTableRow {
    pub d_from: usize,
    /// `None` when the range is open or ends at a symbolic value.
    pub d_to: Option<usize>,
    /// Printed range, e.g. `7-13` or `186-ceil((2V+2)/3)`.
    pub d_label: String,
    pub lower: Entry,
    pub upper: Entry,
    /// Values of `1/α` reaching the lower bound.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inv_alpha: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundTableRow {
    fn single(d: usize, lower: Entry, upper: Entry) -> Self {
        BoundTableRow { d_from: d, d_to: Some(d), d_label: d.to_string(), lower, upper, inv_alpha: vec![], note: None }
    }

    /// `lower` when both bounds agree, `lower-upper` otherwise.
    pub fn value_label(&self) -> String {
        let (l, u) = (self.lower.cell(), self.upper.cell());
        if l == u { l } else { format!("{l}-{u}") }
    }

    pub fn csv_header() -> &'static str {
        "d,value,lower,upper,lower_provenance,upper_provenance,inv_alpha"
    }

    pub fn to_csv(&self) -> String {
        let q = |s: &str| if s.contains(',') { format!("\"{s}\"") } else { s.to_string() };
        [
            self.d_label.clone(),
            self.value_label(),
            self.lower.cell(),
            self.upper.cell(),
            self.lower.provenance.clone(),
            self.upper.provenance.clone(),
            self.inv_alpha.join(" "),
        ]
        .iter()
        .map(|s| q(s))
        .collect::<Vec<_>>()
        .join(",")
    }

    /// Checks `lower <= upper` when both are numbers.
    pub fn consistent(&self) -> bool {
        match (&self.lower.count, &self.upper.count) {
            (Count::Exact(l), Count::Exact(u)) => l <= u,
            _ => true,
        }
    }
}

/// Merges neighbouring rows that print identically.
pub fn group_rows(rows: Vec<BoundTableRow>) -> Vec<BoundTableRow> {
    let mut out: Vec<BoundTableRow> = Vec::new();
    for row in rows {
        if let Some(last) = out.last_mut() {
            let adjacent = last.d_to.is_some_and(|t| t + 1 == row.d_from);
            if adjacent && last.value_label() == row.value_label() && last.inv_alpha == row.inv_alpha {
                last.d_to = row.d_to;
                for (mine, theirs) in [(&mut last.lower, &row.lower), (&mut last.upper, &row.upper)] {
                    if !mine.provenance.split("; ").any(|p| p == theirs.provenance) {
                        mine.provenance = format!("{}; {}", mine.provenance, theirs.provenance);
                    }
                }
                last.d_label = match row.d_to {
                    Some(t) => format!("{}-{t}", last.d_from),
                    None => row.d_label.clone(),
                };
                continue;
            }
        }
        out.push(row);
    }
    out
}

#[derive(Deserialize)]
struct Data {
    neumaier_v: VRange,
    sdp: SdpData,
    max_lines: Vec<DataRow>,
    angle_5_literature: Angle5Literature,
}

#[derive(Deserialize)]
struct VRange {
    low: u64,
    high: u64,
}

#[derive(Deserialize)]
struct SdpData {
    source: String,
    exact_276: [usize; 2],
    symbolic: [usize; 2],
}

#[derive(Deserialize)]
struct DataRow {
    d: [usize; 2],
    lower: u64,
    lower_from: String,
    upper: u64,
    upper_from: String,
    inv_alpha: Vec<String>,
}

#[derive(Deserialize)]
struct Angle5Literature {
    upper: Vec<(usize, u64)>,
    lower: Vec<(usize, u64)>,
}

fn data() -> &'static Data {
    static DATA: OnceLock<Data> = OnceLock::new();
    DATA.get_or_init(|| serde_json::from_str(include_str!("../data/bounds.json")).expect("bundled bound data parses"))
}

/// Neumaier's constant, as reported (without proof).
pub fn neumaier_v_range() -> (u64, u64) {
    (data().neumaier_v.low, data().neumaier_v.high)
}

fn upper_entry(source: &str, d: usize, claimed: u64) -> Result<Entry, BoundsError> {
    let (value, provenance) = if source == "literature" {
        (claimed, "literature".to_string())
    } else if source == "absolute" {
        (absolute_bound(d)?.value, "absolute bound".to_string())
    } else if source == "relative-neumann" {
        let v = neumann_relative_bound(d).ok_or_else(|| BoundsError::Data(format!("{source} at d={d}")))?;
        (v, "relative bound at 1/3 with Neumann's restriction".to_string())
    } else if let Some(k) = source.strip_prefix("relative:") {
        let k: i64 = k.parse().map_err(|_| BoundsError::Data(source.to_string()))?;
        (relative_bound_at(d, k)?.value, format!("relative bound at 1/{k}"))
    } else if let Some(k) = source.strip_prefix("improved-relative:") {
        let k: i64 = k.parse().map_err(|_| BoundsError::Data(source.to_string()))?;
        let v = improved_relative_bound(d, -k).ok_or_else(|| BoundsError::Data(format!("{source} not established at d={d}")))?;
        (v as u64, format!("three-eigenvalue nonexistence at 1/{k}"))
    } else {
        return Err(BoundsError::Data(format!("unknown source {source}")));
    };
    if value != claimed {
        return Err(BoundsError::Data(format!("d={d}: {provenance} gives {value}, table says {claimed}")));
    }
    Ok(Entry::exact(value, provenance))
}

fn lower_entry(source: &str, claimed: u64) -> Entry {
    match source.strip_prefix("construct:") {
        Some(name) => Entry::exact(claimed, name).with_witness(Witness::Build { name: name.to_string() }),
        None => Entry::exact(claimed, source),
    }
}

/// Known bounds on the maximum number of equiangular lines in dimension `d`,
/// one row per dimension, for `2 <= d <= 41`.
pub fn n_table(d_range: std::ops::RangeInclusive<usize>) -> Result<Vec<BoundTableRow>, BoundsError> {
    let mut out = Vec::new();
    for d in d_range {
        let row = data()
            .max_lines
            .iter()
            .find(|r| (r.d[0]..=r.d[1]).contains(&d))
            .ok_or_else(|| BoundsError::Data(format!("no entry for d={d}")))?;
        let mut r = BoundTableRow::single(d, lower_entry(&row.lower_from, row.lower), upper_entry(&row.upper_from, d, row.upper)?);
        r.inv_alpha = row.inv_alpha.clone();
        out.push(r);
    }
    Ok(out)
}

/// Largest lower bound known here for `d <= 96`: monotone table values and
/// the quadratic construction.
pub fn best_known_lower(d: usize) -> Result<u64, BoundsError> {
    let table = data()
        .max_lines
        .iter()
        .filter(|r| r.d[0] <= d)
        .map(|r| r.lower)
        .max()
        .ok_or(BoundsError::DimensionTooSmall(d))?;
    Ok(table.max(corollary_newthm_lower(d).unwrap_or(0)))
}

/// Value of Neumaier's constant, symbolic or assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeumaierV {
    Symbolic,
    Value(u64),
}

fn floor_three_halves(d: usize) -> u64 {
    (3 * (d as u64 - 1)) / 2
}

/// Lower bound `floor(3(d-1)/2)` from blown-up simplices (odd `d`) or
/// triangle forests (even `d`).
fn linear_lower(d: usize) -> Entry {
    let name = if d % 2 == 1 { format!("tensor-{d}") } else { format!("dynkin-{d}") };
    Entry::exact(floor_three_halves(d), name.clone()).with_formula("floor(3(d-1)/2)").with_witness(Witness::Build { name })
}

/// Bounds on the number of equiangular lines at angle 1/5 in dimension `d`.
pub fn n5_bounds(d: usize, v: NeumaierV) -> Result<BoundTableRow, BoundsError> {
    if d < 2 {
        return Err(BoundsError::DimensionTooSmall(d));
    }
    let lit = &data().angle_5_literature;
    let build = |n: u64, name: &str| Entry::exact(n, name).with_witness(Witness::Build { name: name.to_string() });
    let lower = match d {
        2..=4 => build(d as u64, &format!("all-plus-{d}")).with_formula("d"),
        5 | 6 => Entry::exact(d as u64 + 1, "census").with_witness(Witness::Search { n: d + 1, d }),
        7 => build(9, "tensor-7"),
        8 => build(10, "dynkin-8"),
        9 => build(12, "tensor-9"),
        10 => build(16, "hadamard16"),
        11 => Entry::exact(18, "hadamard16 extended by 2 lines").with_witness(Witness::Extend { name: "hadamard16".into(), count: 2 }),
        12 => build(20, "delete6:conference-26"),
        13 => build(26, "conference-26"),
        14 => build(28, "ex415"),
        15 => build(36, "two-graph-36"),
        16 => build(40, "srg40"),
        17 | 18 => build(48, "netto"),
        19 => build(72, "witt"),
        20..=185 => {
            let v = lit.lower.iter().rev().find(|(k, _)| *k <= d).map(|p| p.1).expect("literature lower bounds from d=20");
            Entry::exact(v, "literature")
        }
        _ => linear_lower(d),
    };
    let relative = |d: usize| -> Result<Entry, BoundsError> { Ok(Entry::exact(relative_bound_at(d, 5)?.value, "relative bound at 1/5")) };
    let sdp = &data().sdp;
    let mut note = None;
    let upper = match d {
        2..=4 => relative(d)?.with_formula("d"),
        8 => Entry::exact(10, "classification of order 11").with_witness(Witness::SearchEmpty { n: 11, d: 8 }),
        9 => Entry::exact(12, "extension search from order 12").with_witness(Witness::SearchEmpty { n: 13, d: 9 }),
        12 | 14 | 16 => {
            let v = improved_relative_bound(d, -5).ok_or_else(|| BoundsError::Data(format!("d={d} improvement not established")))?;
            Entry::exact(v as u64, "three-eigenvalue nonexistence")
        }
        _ if d <= 23 => match lit.upper.iter().find(|(k, _)| *k == d) {
            Some(&(_, v)) => Entry::exact(v, "literature"),
            None => relative(d)?,
        },
        _ if d <= sdp.exact_276[1] => Entry::exact(276, sdp.source.clone()),
        _ if d <= sdp.symbolic[1] => Entry { count: Count::Symbolic("B(d)".into()), provenance: sdp.source.clone(), formula: None, witness: None },
        _ if d <= 185 => Entry::exact(absolute_bound(d)?.value, "absolute bound").with_formula("d(d+1)/2"),
        _ => match v {
            NeumaierV::Value(vv) if 3 * d as u64 >= 2 * vv + 5 => Entry::exact(floor_three_halves(d), "Neumaier's theorem").with_formula("floor(3(d-1)/2)"),
            NeumaierV::Value(vv) => Entry::exact(vv, "Neumaier's constant").with_formula("V"),
            NeumaierV::Symbolic => {
                note = Some("the upper bound drops to floor(3(d-1)/2) once d >= ceil((2V+5)/3)".into());
                Entry { count: Count::Symbolic("V".into()), provenance: "Neumaier's constant".into(), formula: None, witness: None }
            }
        },
    };
    if (43..=185).contains(&d) {
        note = Some("at most 276 if the matrix has a principal -(J6 - I6) block".into());
    }
    let mut row = BoundTableRow::single(d, lower, upper);
    row.note = note;
    Ok(row)
}

/// The angle-1/5 table in the same layout as the literature: ranges with
/// equal entries merged, and the two regimes governed by Neumaier's constant.
pub fn n5_table(v: NeumaierV) -> Result<Vec<BoundTableRow>, BoundsError> {
    let mut rows = (2..=185).map(|d| n5_bounds(d, v)).collect::<Result<Vec<_>, _>>()?;
    for r in &mut rows {
        // one provenance per merged range
        r.note = None;
    }
    let mut out = group_rows(rows);
    for r in out.iter_mut().filter(|r| r.d_from >= 43 && r.d_to.is_some_and(|t| t <= 185)) {
        r.note = n5_bounds(r.d_from, v)?.note;
    }
    let lower = Entry { witness: None, provenance: "tensor-d or dynkin-d".into(), ..linear_lower(186) };
    let exact = Entry { provenance: "Neumaier's theorem".into(), ..lower.clone() };
    let row = |d_from, d_to, d_label: String, upper| BoundTableRow { d_from, d_to, d_label, lower: lower.clone(), upper, inv_alpha: vec![], note: None };
    match v {
        NeumaierV::Symbolic => {
            let upper = Entry { count: Count::Symbolic("V".into()), provenance: "Neumaier's constant".into(), formula: None, witness: None };
            out.push(row(186, None, "186-ceil((2V+2)/3)".into(), upper));
            out.push(row(186, None, "ceil((2V+5)/3)-".into(), exact));
        }
        NeumaierV::Value(vv) => {
            let cut = (2 * vv as usize + 5).div_ceil(3).max(186);
            if cut > 186 {
                out.push(row(186, Some(cut - 1), format!("186-{}", cut - 1), Entry::exact(vv, "Neumaier's constant")));
            }
            out.push(row(cut, None, format!("{cut}-"), exact));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub d: usize,
    pub witness: Witness,
    pub claimed: String,
    pub found: String,
    pub ok: bool,
}

/// Reruns a witness for a row whose bound is `count` in dimension `d`.
/// `lambda0` is `Some(-5)` for the angle-1/5 table, where the embedding
/// dimension is measured at -5 rather than at the smallest eigenvalue.
pub fn check_witness(witness: &Witness, d: usize, count: u64, lambda0: Option<i64>) -> Result<WitnessCheck, ConstructionError> {
    let (found, ok) = match witness {
        Witness::Build { name } => {
            let b = build(name)?;
            let dim = match lambda0 {
                Some(l) => psd_rank(&b.seidel.shifted(l)),
                None => Some(b.dimension),
            };
            let n = b.seidel.n() as u64;
            match dim {
                Some(dim) => (format!("{n} lines in dimension {dim}"), n >= count && dim <= d),
                None => ("smallest eigenvalue below the angle".into(), false),
            }
        }
        Witness::Search { n, d: dd } => {
            let found = systems_in_dimension(*n, lambda0.unwrap_or(-5), *dd)?.len();
            (format!("{found} classes"), found > 0 && *n as u64 >= count && *dd <= d)
        }
        Witness::SearchEmpty { n, d: dd } => {
            let found = systems_in_dimension(*n, lambda0.unwrap_or(-5), *dd)?.len();
            (format!("{found} classes"), found == 0 && *n as u64 == count + 1 && *dd == d)
        }
        Witness::Extend { name, count: k } => {
            let base = build(name)?;
            let out = extend_system(&base.seidel, lambda0.unwrap_or(-5), *k, ExtendOptions { max_dimension: Some(d) })?;
            let n = (base.seidel.n() + k) as u64;
            (format!("{} classes of {n} lines", out.len()), !out.is_empty() && n >= count)
        }
    };
    Ok(WitnessCheck { d, witness: witness.clone(), claimed: count.to_string(), found, ok })
}

/// Checks every witness attached to the rows.
pub fn check_rows(rows: &[BoundTableRow], lambda0: Option<i64>) -> Result<Vec<WitnessCheck>, ConstructionError> {
    let mut out = Vec::new();
    for r in rows {
        for e in [&r.lower, &r.upper] {
            if let (Some(w), Count::Exact(c)) = (&e.witness, &e.count) {
                out.push(check_witness(w, r.d_from, *c, lambda0)?);
            }
        }
    }
    Ok(out)
}


// ---- feasible spectra ----

/// A feasible spectrum with its existence status.
#[derive(Clone, Debug, Serialize)]
pub struct FeasibleRow {
    #[serde(flatten)]
    pub spectrum: FeasibleSpectrum,
    pub existence: Existence,
    /// Catalog name of a realizing construction.
    pub example: Option<String>,
}

/// Catalog constructions with three integral eigenvalues, matched against feasible spectra.
const THREE_EIGENVALUE_EXAMPLES: &[&str] = &["ex415", "srg40", "netto", "witt"];

/// Feasible three-eigenvalue spectra for each `d` in `targets`, from the
/// target count up to the relative bound. A row is marked existing when a
/// catalog construction has that spectrum, nonexistent when the clique
/// argument rules it out, and unknown otherwise.
pub fn feasible_table(lambda0: i64, targets: &BTreeMap<usize, usize>) -> Result<Vec<FeasibleRow>, ConstructionError> {
    let (Some(&lo), Some(&hi)) = (targets.keys().next(), targets.keys().next_back()) else {
        return Ok(Vec::new());
    };
    let rows = enumerate_feasible_spectra(lo..=hi, lambda0, targets);
    let mut known: Vec<(String, Spectrum)> = Vec::new();
    for name in THREE_EIGENVALUE_EXAMPLES {
        let spec = match build(name)?.spectrum {
            Some(s) => s,
            None => continue,
        };
        if rows.iter().any(|r| r.spectrum().pairs() == spec.pairs()) {
            known.push((name.to_string(), spec));
        }
    }
    Ok(rows
        .into_iter()
        .map(|f| {
            let spec = f.spectrum();
            let example = known.iter().find(|(_, s)| s.pairs() == spec.pairs()).map(|(n, _)| n.clone());
            let existence = if example.is_some() {
                Existence::Exists
            } else if theorem_nonex_certificate(&spec).is_ok_and(|c| c.verdict == Verdict::Nonexistent) {
                Existence::DoesNotExist
            } else {
                Existence::Unknown
            };
            FeasibleRow { spectrum: f, existence, example }
        })
        .collect())
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Existence::Exists => "Y",
            Existence::DoesNotExist => "N",
            Existence::Unknown => "?",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn absolute_examples() {
        assert_eq!(absolute_bound(7).unwrap(), AbsoluteBound { value: 28, equality_possible: true });
        assert_eq!(absolute_bound(23).unwrap(), AbsoluteBound { value: 276, equality_possible: true });
        assert_eq!(absolute_bound(4).unwrap(), AbsoluteBound { value: 10, equality_possible: false });
        assert!(absolute_bound(2).unwrap().equality_possible);
        assert!(!absolute_bound(14).unwrap().equality_possible);
        assert!(absolute_bound(1).is_err());
    }

    #[test]
    fn relative_examples() {
        let r = relative_bound_at(23, 5).unwrap();
        assert_eq!((r.value, r.equality_possible), (276, true));
        assert_eq!(relative_bound_at(7, 3).unwrap().value, 28);
        assert_eq!(relative_bound_at(95, 9), Err(BoundsError::AngleOutOfRange));
        // boundary α = 1/sqrt(d+2) with d = 7
        assert!(relative_bound_at(7, 3).is_ok());
        assert!(relative_bound_at(8, 3).is_err());
        assert_eq!(relative_bound(5, &BigRational::new((-1).into(), 3.into())), Err(BoundsError::AngleOutOfRange));
        assert!(!relative_bound_at(11, 5).unwrap().equality_possible);
    }

    #[test]
    fn neumann_examples() {
        assert!(neumann_filter(30, 14, &inv(5)));
        assert!(!neumann_filter(30, 14, &inv(4)));
        assert!(neumann_filter(20, 14, &inv(4)));
        assert!(!neumann_filter(7, 3, &BigRational::new(2.into(), 5.into())));
        assert!(even_eigenvalue_filter(&Spectrum::from_ints(&[(-5, 24), (7, 15), (15, 1)])));
        assert!(!even_eigenvalue_filter(&Spectrum::from_ints(&[(-4, 2), (2, 4)])));
    }

    proptest! {
        #[test]
        fn relative_never_exceeds_absolute(d in 2usize..=200, half in 1i64..=7) {
            let k = 2 * half + 1;
            if let Ok(r) = relative_bound_at(d, k) {
                prop_assert!(r.value <= absolute_bound(d).unwrap().value);
            }
        }
    }

    #[test]
    fn n_table_examples() {
        let rows = n_table(2..=41).unwrap();
        assert!(rows.iter().all(|r| r.consistent()));
        let at = |d: usize| rows.iter().find(|r| r.d_from == d).unwrap().value_label();
        assert_eq!(at(16), "40-41");
        assert_eq!(at(14), "28-29");
        assert_eq!(at(23), "276");
        assert!(n_table(1..=2).is_err());
    }

    #[test]
    fn n5_table_layout() {
        let rows = n5_table(NeumaierV::Symbolic).unwrap();
        let got: Vec<(String, String)> = rows.iter().map(|r| (r.d_label.clone(), r.value_label())).collect();
        let want = [
            ("2-4", "d"),
            ("5", "6"),
            ("6", "7"),
            ("7", "9"),
            ("8", "10"),
            ("9", "12"),
            ("10", "16"),
            ("11", "18"),
            ("12", "20-21"),
            ("13", "26"),
            ("14", "28-29"),
            ("15", "36"),
            ("16", "40-41"),
            ("17", "48-50"),
            ("18", "48-61"),
            ("19", "72-76"),
            ("20", "90-96"),
            ("21", "126"),
            ("22", "176"),
            ("23-60", "276"),
            ("61-136", "276-B(d)"),
            ("137-185", "276-d(d+1)/2"),
            ("186-ceil((2V+2)/3)", "floor(3(d-1)/2)-V"),
            ("ceil((2V+5)/3)-", "floor(3(d-1)/2)"),
        ];
        let want: Vec<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(got, want);
        assert!(rows[20].note.is_some() && rows[21].note.is_some() && rows[19].note.is_none());
    }

    #[test]
    fn n5_examples() {
        let row = |d| n5_bounds(d, NeumaierV::Symbolic).unwrap().value_label();
        assert_eq!(row(10), "16");
        assert_eq!(row(12), "20-21");
        assert_eq!(row(14), "28-29");
        assert_eq!(row(3), "d");
        assert_eq!(row(100), "276-B(d)");
        assert_eq!(row(150), "276-d(d+1)/2");
        assert_eq!(n5_bounds(150, NeumaierV::Symbolic).unwrap().upper.count, Count::Exact(150 * 151 / 2));
        assert_eq!(row(200), "floor(3(d-1)/2)-V");
        assert_eq!(n5_bounds(200, NeumaierV::Symbolic).unwrap().lower.count, Count::Exact(298));
        let fixed = n5_bounds(4000, NeumaierV::Value(2486)).unwrap();
        assert_eq!(fixed.value_label(), "floor(3(d-1)/2)");
        assert_eq!(fixed.upper.count, Count::Exact(5998));
        for d in 2..=300 {
            assert!(n5_bounds(d, NeumaierV::Symbolic).unwrap().consistent(), "d = {d}");
        }
    }

    #[test]
    fn s2t1_below_best_lower() {
        for d in 2..=96 {
            assert!(corollary_s2t1_lower(d) <= best_known_lower(d).unwrap(), "d = {d}");
        }
    }

    #[test]
    fn cheap_witnesses_hold() {
        let rows: Vec<_> = [2usize, 5, 7, 10, 13].iter().map(|&d| n5_bounds(d, NeumaierV::Symbolic).unwrap()).collect();
        for c in check_rows(&rows, Some(-5)).unwrap() {
            assert!(c.ok, "{c:?}");
        }
        let rows = n_table(2..=7).unwrap();
        for c in check_rows(&rows, None).unwrap() {
            assert!(c.ok, "{c:?}");
        }
    }

    #[test]
    fn feasible_table_marks() {
        let targets = BTreeMap::from([(14, 28), (16, 40), (17, 48)]);
        let rows = feasible_table(-5, &targets).unwrap();
        let got: Vec<(usize, String, String)> = rows.iter().map(|r| (r.spectrum.n, r.spectrum.spectrum().to_string(), r.existence.to_string())).collect();
        let want = [
            (28, "{[-5]^14,[3]^7,[7]^7}", "Y"),
            (30, "{[-5]^16,[5]^9,[7]^5}", "N"),
            (40, "{[-5]^24,[5]^6,[9]^10}", "?"),
            (40, "{[-5]^24,[7]^15,[15]^1}", "Y"),
            (42, "{[-5]^26,[7]^7,[9]^9}", "N"),
            (48, "{[-5]^31,[7]^8,[11]^9}", "Y"),
            (49, "{[-5]^32,[9]^16,[16]^1}", "?"),
        ];
        let want: Vec<_> = want.iter().map(|(n, s, e)| (*n, s.to_string(), e.to_string())).collect();
        assert_eq!(got, want);
    }
}
