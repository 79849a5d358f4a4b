//! The obstruction battery run on each knot, and its text and JSON renderings.

use std::fmt::Write as _;

use conway_core::invariants::{
    criterion_degree, criterion_mod2, criterion_pc_parity, determinant, sum_of_two_squares, TwoSquares,
};
use conway_core::obstructions::triple_product;
use conway_core::{conjecture_test, conway_to_alexander, hk_factorization, pc, ConwayPolynomial, HkVerdict, SquareVerdict};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::table::{KnotRecord, Source};

/// Default reach, in `z`-degree, of the listed `pc_{4i}` parities.
pub const DEFAULT_HORIZON: usize = 24;

/// An exact integer, written to JSON as a bare number of any size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num(pub BigInt);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = self.0.to_string().parse().expect("integers are JSON numbers");
        n.serialize(serializer)
    }
}

impl From<BigInt> for Num {
    fn from(n: BigInt) -> Self {
        Num(n)
    }
}

/// What a failing test rules out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// A proven obstruction to amphicheirality.
    Amphicheirality,
    /// Rules out amphicheirality only if the conjectured lifts of `pc_{4i}` exist.
    AmphicheiralityConditional,
    /// Rules out strong amphicheirality only.
    StrongAmphicheirality,
}

impl Scope {
    fn label(self) -> &'static str {
        match self {
            Scope::Amphicheirality => "excludes amphicheirality",
            Scope::AmphicheiralityConditional => "excludes amphicheirality, conditionally",
            Scope::StrongAmphicheirality => "excludes strong amphicheirality only",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingTest {
    pub test: String,
    pub scope: Scope,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PcEntry {
    pub degree: usize,
    pub value: Num,
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureSection {
    /// `"SQUARE"` or `"NOT_SQUARE"`.
    pub verdict: &'static str,
    /// `F` with `F^2 ≡ C(z)C(iz)C(z^2) (mod 4)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_exponent: Option<usize>,
    pub product_mod_4: String,
    pub consistent_with_pc: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeterminantSection {
    /// `C` at `z^2 = -4`; the determinant is its absolute value.
    pub value: Num,
    pub sum_of_two_squares: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[Num; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocking_prime: Option<Num>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HkSection {
    /// `"FACTORED"` or `"NOT_FACTORABLE"`.
    pub verdict: &'static str,
    /// `φ` with `C(z) = φ(z)φ(-z)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<String>,
    /// `ψ` with `C(z) = ψ(z)^2`, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionEntry {
    pub k: u8,
    pub degree: usize,
    pub value: Option<Num>,
    pub parity: Option<u8>,
    /// `pc_{4k} mod 2`, which the criterion is meant to compute.
    pub pc_parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossings: Option<u32>,
    pub source: Source,
    pub input: String,
    pub conway: String,
    pub conway_coefficients: Vec<Num>,
    pub alexander: String,
    pub pc: Vec<PcEntry>,
    pub conjecture: ConjectureSection,
    pub determinant: DeterminantSection,
    pub hk: HkSection,
    pub criteria: Vec<CriterionEntry>,
    pub failing_tests: Vec<FailingTest>,
    pub obstructed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

/// Runs every test on every record, in parallel, keeping input order.
pub fn analyze(records: &[KnotRecord], horizon: usize) -> Vec<ObstructionReport> {
    records.par_iter().map(|r| analyze_record(r, horizon)).collect()
}

pub fn analyze_record(record: &KnotRecord, horizon: usize) -> ObstructionReport {
    let mut report = analyze_conway(&record.name, &record.conway, horizon);
    report.crossings = record.crossings;
    report.source = record.source();
    report.input = record.input.clone();
    report
}

/// The battery for a bare Conway polynomial.
pub fn analyze_conway(name: &str, c: &ConwayPolynomial, horizon: usize) -> ObstructionReport {
    let mut errors = Vec::new();
    let mut notes = Vec::new();
    let mut failing = Vec::new();

    let count = horizon / 4;
    let seq = pc(c, 2 * count);
    let pc_entries: Vec<PcEntry> = (1..=count)
        .map(|i| {
            let v = seq.get(2 * i).expect("within horizon").clone();
            let parity = if (&v % 2u32).is_zero() { 0 } else { 1 };
            PcEntry {
                degree: 4 * i,
                value: Num(v),
                parity,
            }
        })
        .collect();

    let conjecture = conjecture_section(c, &mut failing, &mut errors);
    let determinant = determinant_section(c, &mut failing, &mut errors);
    let hk = hk_section(c, &mut failing, &mut errors);

    let mut criteria = Vec::new();
    for k in 1..=3u8 {
        let pc_parity = criterion_pc_parity(c, k as usize);
        let (value, parity) = match criterion_mod2(c, k) {
            Ok(v) => (Some(Num(v.value)), Some(v.parity)),
            Err(e) => {
                errors.push(format!("criterion {k}: {e}"));
                (None, None)
            }
        };
        let degree = criterion_degree(k);
        if parity == Some(1) && pc_parity == 1 {
            let scope = if k == 1 {
                Scope::Amphicheirality
            } else {
                Scope::AmphicheiralityConditional
            };
            failing.push(FailingTest {
                test: format!("criterion_{k}"),
                scope,
                detail: format!("degree-{degree} criterion is odd"),
            });
        }
        if parity.is_some() && parity != Some(pc_parity) {
            notes.push(format!(
                "criterion_{k} parity {} disagrees with pc_{degree} parity {pc_parity}; the criterion is not counted",
                parity.expect("checked")
            ));
        }
        criteria.push(CriterionEntry {
            k,
            degree,
            value,
            parity,
            pc_parity,
        });
    }

    ObstructionReport {
        name: name.to_string(),
        crossings: None,
        source: Source::Conway,
        input: c.to_string(),
        conway: c.to_string(),
        conway_coefficients: c.coeffs().iter().cloned().map(Num).collect(),
        alexander: conway_to_alexander(c).to_string(),
        pc: pc_entries,
        conjecture,
        determinant,
        hk,
        criteria,
        obstructed: !failing.is_empty(),
        failing_tests: failing,
        notes,
        errors,
    }
}

fn conjecture_section(c: &ConwayPolynomial, failing: &mut Vec<FailingTest>, errors: &mut Vec<String>) -> ConjectureSection {
    let report = conjecture_test(c);
    let product = triple_product(c).reduce::<4>();
    if !report.consistent {
        errors.push("square test disagrees with the pc_{4i} parities".to_string());
    }
    let product_mod_4 = product.display('z').to_string();
    match report.verdict {
        SquareVerdict::Square { witness } => {
            let witness = if &witness * &witness == product {
                Some(witness.display('z').to_string())
            } else {
                errors.push("square root failed re-verification".to_string());
                None
            };
            ConjectureSection {
                verdict: "SQUARE",
                witness,
                failure_exponent: None,
                product_mod_4,
                consistent_with_pc: report.consistent,
            }
        }
        SquareVerdict::NotSquare { failure_exponent } => {
            failing.push(FailingTest {
                test: "conjecture".to_string(),
                scope: Scope::AmphicheiralityConditional,
                detail: format!("C(z)C(iz)C(z^2) is not a square mod 4; fails at z^{failure_exponent}"),
            });
            ConjectureSection {
                verdict: "NOT_SQUARE",
                witness: None,
                failure_exponent: Some(failure_exponent),
                product_mod_4,
                consistent_with_pc: report.consistent,
            }
        }
    }
}

fn determinant_section(c: &ConwayPolynomial, failing: &mut Vec<FailingTest>, errors: &mut Vec<String>) -> DeterminantSection {
    let value = determinant(c);
    let abs = value.abs();
    match sum_of_two_squares(&value) {
        TwoSquares::Yes { a, b } => {
            let verified = &a * &a + &b * &b == abs;
            if !verified {
                errors.push(format!("two-squares witness ({a}, {b}) failed re-verification"));
            }
            DeterminantSection {
                value: Num(value),
                sum_of_two_squares: true,
                witness: verified.then(|| [Num(a), Num(b)]),
                blocking_prime: None,
            }
        }
        TwoSquares::No { blocking_prime } => {
            if !(&abs % &blocking_prime).is_zero() {
                errors.push(format!("blocking prime {blocking_prime} does not divide {abs}"));
            }
            failing.push(FailingTest {
                test: "determinant".to_string(),
                scope: Scope::Amphicheirality,
                detail: format!("determinant {abs} is not a sum of two squares ({blocking_prime} divides it to an odd power)"),
            });
            DeterminantSection {
                value: Num(value),
                sum_of_two_squares: false,
                witness: None,
                blocking_prime: Some(Num(blocking_prime)),
            }
        }
    }
}

fn hk_section(c: &ConwayPolynomial, failing: &mut Vec<FailingTest>, errors: &mut Vec<String>) -> HkSection {
    let zpoly = c.z_polynomial();
    match hk_factorization(c) {
        HkVerdict::Factored { phi, psi } => {
            let phi_ok = &phi * &phi.substitute_neg() == zpoly;
            let psi_z = psi.map(|p| p.substitute_square());
            let psi_ok = psi_z.as_ref().map_or(true, |p| p * p == zpoly);
            if !phi_ok || !psi_ok {
                errors.push("factorization witness failed re-verification".to_string());
            }
            HkSection {
                verdict: "FACTORED",
                phi: phi_ok.then(|| phi.display('z').to_string()),
                psi: psi_z.filter(|_| psi_ok).map(|p| p.display('z').to_string()),
            }
        }
        HkVerdict::NotFactorable => {
            failing.push(FailingTest {
                test: "hk".to_string(),
                scope: Scope::StrongAmphicheirality,
                detail: "C(z) is not φ(z)φ(-z) for an integer polynomial φ".to_string(),
            });
            HkSection {
                verdict: "NOT_FACTORABLE",
                phi: None,
                psi: None,
            }
        }
    }
}

/// Pretty JSON array with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

pub fn render_text(reports: &[ObstructionReport]) -> String {
    let mut out = String::new();
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        render_one(&mut out, r).expect("writing to a String");
    }
    out
}

fn render_one(out: &mut String, r: &ObstructionReport) -> std::fmt::Result {
    let crossings = r.crossings.map(|c| format!(" ({c} crossings)")).unwrap_or_default();
    writeln!(out, "{}{crossings}", r.name)?;
    writeln!(out, "  C(z)         {}", r.conway)?;
    writeln!(out, "  A(t)         {}", r.alexander)?;
    let conj = &r.conjecture;
    match (&conj.witness, conj.failure_exponent) {
        (Some(w), _) => writeln!(out, "  conjecture   SQUARE, root {w}")?,
        (None, Some(e)) => writeln!(out, "  conjecture   NOT_SQUARE, fails at z^{e}")?,
        (None, None) => writeln!(out, "  conjecture   {}", conj.verdict)?,
    }
    let det = &r.determinant;
    match (&det.witness, &det.blocking_prime) {
        (Some([a, b]), _) => writeln!(out, "  determinant  {} = {}^2 + {}^2", det.value.0.abs(), a.0, b.0)?,
        (None, Some(p)) => writeln!(out, "  determinant  {}, not a sum of two squares (blocked by {})", det.value.0.abs(), p.0)?,
        (None, None) => writeln!(out, "  determinant  {}", det.value.0.abs())?,
    }
    match (&r.hk.phi, &r.hk.psi) {
        (Some(phi), Some(psi)) => writeln!(out, "  hk           φ = {phi}, ψ = {psi}")?,
        (Some(phi), None) => writeln!(out, "  hk           φ = {phi}")?,
        _ => writeln!(out, "  hk           {}", r.hk.verdict)?,
    }
    let criteria: Vec<String> = r
        .criteria
        .iter()
        .map(|c| match (&c.value, c.parity) {
            (Some(v), Some(p)) => format!("k={}: {} ({})", c.k, v.0, if p == 0 { "even" } else { "odd" }),
            _ => format!("k={}: error", c.k),
        })
        .collect();
    writeln!(out, "  criteria     {}", criteria.join(", "))?;
    let pcs: Vec<String> = r.pc.iter().map(|p| format!("{}:{}", p.degree, p.parity)).collect();
    writeln!(out, "  pc parities  {}", pcs.join(" "))?;
    for note in &r.notes {
        writeln!(out, "  note         {note}")?;
    }
    for err in &r.errors {
        writeln!(out, "  error        {err}")?;
    }
    if r.obstructed {
        writeln!(out, "  OBSTRUCTED")?;
        for t in &r.failing_tests {
            writeln!(out, "    {}: {} [{}]", t.test, t.detail, t.scope.label())?;
        }
    } else {
        writeln!(out, "  no obstruction found")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conway(c: &[i64]) -> ConwayPolynomial {
        ConwayPolynomial::from_i64s(c).unwrap()
    }

    fn tests_of(r: &ObstructionReport) -> Vec<(&str, Scope)> {
        r.failing_tests.iter().map(|t| (t.test.as_str(), t.scope)).collect()
    }

    #[test]
    fn nine_47_is_obstructed_everywhere() {
        let r = analyze_conway("9_47", &conway(&[1, -1, 2, 1]), DEFAULT_HORIZON);
        assert!(r.obstructed);
        assert_eq!(
            tests_of(&r),
            vec![
                ("conjecture", Scope::AmphicheiralityConditional),
                ("determinant", Scope::Amphicheirality),
                ("hk", Scope::StrongAmphicheirality),
                ("criterion_3", Scope::AmphicheiralityConditional),
            ]
        );
        assert_eq!(r.conjecture.failure_exponent, Some(24));
        assert_eq!(r.determinant.value, Num(BigInt::from(-27)));
        assert_eq!(r.determinant.blocking_prime, Some(Num(BigInt::from(3))));
        assert_eq!(r.criteria[2].value, Some(Num(BigInt::from(-9))));
        assert!(r.errors.is_empty());
    }

    #[test]
    fn figure_eight_passes() {
        let r = analyze_conway("4_1", &conway(&[1, -1]), DEFAULT_HORIZON);
        assert!(!r.obstructed);
        assert_eq!(r.hk.phi.as_deref(), Some("1 + z"));
        assert_eq!(r.determinant.witness, Some([Num(BigInt::from(1)), Num(BigInt::from(2))]));
        assert_eq!(r.alexander, "-t^-1 + 3 - t");
    }

    #[test]
    fn seventy_six_only_blocks_strong_amphicheirality() {
        let r = analyze_conway("c", &conway(&[1, -76]), DEFAULT_HORIZON);
        assert_eq!(tests_of(&r), vec![("hk", Scope::StrongAmphicheirality)]);
        assert_eq!(r.conjecture.verdict, "SQUARE");
        assert_eq!(r.determinant.witness, Some([Num(BigInt::from(4)), Num(BigInt::from(17))]));
    }

    #[test]
    fn json_numbers_are_exact() {
        let huge = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        assert_eq!(serde_json::to_string(&Num(huge)).unwrap(), "123456789012345678901234567890");
    }

    #[test]
    fn text_mentions_scopes() {
        let r = analyze_conway("9_47", &conway(&[1, -1, 2, 1]), 12);
        let text = render_text(&[r]);
        assert!(text.contains("OBSTRUCTED"));
        assert!(text.contains("hk: C(z) is not φ(z)φ(-z) for an integer polynomial φ [excludes strong amphicheirality only]"));
        assert!(text.contains("pc parities  4:0 8:0 12:1"));
    }
}
