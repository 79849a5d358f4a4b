//! Known values re-checked at run time, plus the embedded sample table.

use conway_core::alexander::mod4_rule;
use conway_core::invariants::{determinant, sum_of_two_squares, v3_from_jones, JonesPolynomial, TwoSquares};
use conway_core::obstructions::triple_product;
use conway_core::ring::TruncatedSeries;
use conway_core::{conjecture_test, hk_factorization, log_z, ConwayPolynomial, HkVerdict, LaurentPolynomial, Polynomial, SquareVerdict};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::parse::parse_conway;
use crate::report::{analyze, ObstructionReport, DEFAULT_HORIZON};
use crate::table::{read_table, Format};

/// The bundled three-knot table. Two rows are Alexander polynomials, so
/// loading it exercises the conversion.
pub const SAMPLE_CSV: &str = include_str!("../data/sample.csv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfTest {
    pub passed: bool,
    pub checks: Vec<Check>,
    pub sample: Vec<ObstructionReport>,
}

fn check(name: &'static str, got: String, want: &str) -> Check {
    let passed = got == want;
    let detail = if passed { got } else { format!("got {got}, expected {want}") };
    Check { name, passed, detail }
}

fn conway(text: &str) -> ConwayPolynomial {
    parse_conway(text).expect("built-in polynomials parse")
}

pub fn run() -> SelfTest {
    let table = read_table(SAMPLE_CSV, Format::Csv, true).expect("embedded table is valid");
    let sample = analyze(&table.records, DEFAULT_HORIZON);

    let nine_47 = conway("1 - z^2 + 2z^4 + z^6");
    let product = triple_product(&nine_47);
    let root = TruncatedSeries::from_polynomial(&product.map(|c| BigRational::from_integer(c.clone())), 28)
        .sqrt_rational()
        .expect("constant term 1");
    let root_text = Polynomial::new(root.coeffs().iter().step_by(4).cloned().collect::<Vec<_>>()).display('w').to_string();

    let one_plus_x = TruncatedSeries::from_polynomial(&Polynomial::from_i64s(&[1, 1]), 64);
    let log_support: Vec<String> = log_z(&one_plus_x, 64)
        .expect("constant term 1")
        .iter()
        .filter(|(_, a)| **a != BigInt::from(0))
        .map(|(i, a)| format!("{i}:{a}"))
        .collect();

    let seventy_six = conway("1 - 76z^2");
    let two_squares = match sum_of_two_squares(&determinant(&seventy_six)) {
        TwoSquares::Yes { a, b } => format!("{a}^2 + {b}^2"),
        TwoSquares::No { blocking_prime } => format!("blocked by {blocking_prime}"),
    };
    let phi = |text: &str| match hk_factorization(&conway(text)) {
        HkVerdict::Factored { phi, .. } => phi.display('z').to_string(),
        HkVerdict::NotFactorable => "NOT_FACTORABLE".to_string(),
    };
    let verdict = |c: &ConwayPolynomial| match conjecture_test(c).verdict {
        SquareVerdict::Square { .. } => "SQUARE".to_string(),
        SquareVerdict::NotSquare { failure_exponent } => format!("NOT_SQUARE at z^{failure_exponent}"),
    };
    let v3 = |low: i64, c: &[i64]| {
        let j = JonesPolynomial::new(LaurentPolynomial::from_i64s(low, c)).expect("J(1) = 1");
        v3_from_jones(&j).map_or_else(|e| e.to_string(), |v| v.to_string())
    };
    let fig8_mod4 = mod4_rule(&conway("1 - z^2").x_polynomial().reduce::<4>());
    let sample_conway: Vec<String> = table.records.iter().map(|r| format!("{}: {}", r.name, r.conway)).collect();

    let checks = vec![
        check(
            "9_47 triple product mod 4",
            product.reduce::<4>().display('z').to_string(),
            "1 + 2z^4 + z^8 + 3z^24",
        ),
        check(
            "9_47 rational square root in w = z^4",
            root_text,
            "1 + w + 2w^2 - 2w^3 + 8w^4 - 2w^5 - (33/2)w^6 + (73/2)w^7",
        ),
        check("9_47 squareness", verdict(&nine_47), "NOT_SQUARE at z^24"),
        check("log of 1 + x", log_support.join(" "), "1:-1 2:-1 4:-1 8:-1 16:-1 32:-1 64:-1"),
        check("1 - 76z^2 determinant", two_squares, "4^2 + 17^2"),
        check("1 - 76z^2 squareness", verdict(&seventy_six), "SQUARE"),
        check("1 - 76z^2 factorization", phi("1 - 76z^2"), "NOT_FACTORABLE"),
        check("1 - z^2 factorization", phi("1 - z^2"), "1 + z"),
        check("1 - 4z^2 factorization", phi("1 - 4z^2"), "1 + 2z"),
        check("figure-eight mod 4 image", fig8_mod4.display('t').to_string(), "3t^-1 + 3 + 3t"),
        check("v3 of the unknot", v3(0, &[1]), "0"),
        check("v3 of the right trefoil", v3(1, &[1, 0, 1, -1]), "1"),
        check("v3 of the figure-eight", v3(-2, &[1, -1, 1, -1, 1]), "0"),
        check(
            "sample Conway forms",
            sample_conway.join(", "),
            "4_1: 1 - z^2, 8_3: 1 - 4z^2, 9_47: 1 - z^2 + 2z^4 + z^6",
        ),
    ];
    SelfTest {
        passed: checks.iter().all(|c| c.passed),
        checks,
        sample,
    }
}

pub fn render_text(result: &SelfTest) -> String {
    let mut out = String::new();
    for c in &result.checks {
        out.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    out.push('\n');
    out.push_str(&crate::report::render_text(&result.sample));
    out.push_str(if result.passed { "\nselftest passed\n" } else { "\nselftest FAILED\n" });
    out
}

#[cfg(test)]
mod tests {
    #[test]
    fn selftest_passes() {
        let result = super::run();
        for c in &result.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(result.sample.len(), 3);
    }
}
