//! Published values of the first global threshold, by degree and singularity type.

use super::LctError;
use crate::surface::{is_admissible, Family, SingularityType};
use crate::Rational;

fn ty(s: &str) -> SingularityType {
    s.parse().expect("well-formed label")
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// A rule fires when the type equals (`exact`) or contains one of its patterns.
struct Rule {
    value: Rational,
    exact: &'static [&'static str],
    contains: &'static [&'static str],
}

fn first_match(sigma: &SingularityType, rules: &[Rule]) -> Option<Rational> {
    let bare = sigma.unrefined();
    rules
        .iter()
        .find(|rule| {
            rule.exact.iter().any(|p| ty(p) == bare) || rule.contains.iter().any(|p| sigma.contains(&ty(p)))
        })
        .map(|rule| rule.value)
}

fn degree_two(sigma: &SingularityType) -> Rational {
    let many_a1 = sigma.count(Family::A, 1) >= 5;
    let rules = [
        Rule { value: r(1, 6), exact: &["E7"], contains: &[] },
        Rule { value: r(1, 4), exact: &["E6"], contains: &["D6"] },
        Rule { value: r(1, 3), exact: &[], contains: &["D5", "A5'"] },
        Rule {
            value: r(1, 2),
            exact: &[],
            contains: &["(3A1)'", "(4A1)'", "A3", "A4", "A5''", "A6", "A7", "D4"],
        },
    ];
    first_match(sigma, &rules).unwrap_or(if many_a1 { r(1, 2) } else { r(2, 3) })
}

/// The cubic-surface table.
pub fn expected_cubic_lct(sigma: &SingularityType) -> Result<Rational, LctError> {
    if !is_admissible(3, sigma) {
        return Err(LctError::Inadmissible { degree: 3, sigma: sigma.to_string() });
    }
    let rules = [
        Rule { value: r(1, 6), exact: &["E6"], contains: &[] },
        Rule { value: r(1, 4), exact: &["D5"], contains: &["A5"] },
        Rule { value: r(1, 3), exact: &["D4"], contains: &["A4", "2A2"] },
        Rule { value: r(2, 3), exact: &["A1"], contains: &[] },
    ];
    Ok(first_match(sigma, &rules).unwrap_or(r(1, 2)))
}

/// Expected first global threshold; degree-2 input must carry its refinement marks.
pub fn expected_lct1(degree: u32, sigma: &SingularityType) -> Result<Rational, LctError> {
    if !is_admissible(degree, sigma) {
        return Err(LctError::Inadmissible { degree, sigma: sigma.to_string() });
    }
    let exact = |table: &[(&str, Rational)]| {
        let bare = sigma.unrefined();
        table
            .iter()
            .find(|(p, _)| ty(p) == bare)
            .map(|&(_, v)| v)
            .ok_or_else(|| LctError::Inadmissible { degree, sigma: sigma.to_string() })
    };
    match degree {
        2 => {
            let a5_unmarked = sigma.components().iter().any(|c| c.family == Family::A && c.rank == 5 && c.mark.is_none());
            let a1 = sigma.count(Family::A, 1);
            if a5_unmarked || ((3..=4).contains(&a1) && sigma.a1_mark().is_none()) {
                return Err(LctError::MissingRefinement(sigma.to_string()));
            }
            Ok(degree_two(sigma))
        }
        3 => {
            let rules = [
                Rule { value: r(1, 6), exact: &["E6"], contains: &[] },
                Rule { value: r(1, 4), exact: &["D5"], contains: &["A5"] },
                Rule { value: r(1, 3), exact: &["D4"], contains: &["A4", "2A2"] },
                Rule { value: r(2, 3), exact: &["A1"], contains: &[] },
            ];
            Ok(first_match(sigma, &rules).unwrap_or(r(1, 2)))
        }
        4 => {
            let rules = [
                Rule { value: r(1, 6), exact: &["D5"], contains: &[] },
                Rule { value: r(1, 4), exact: &["A4", "D4"], contains: &["A1+A3"] },
                Rule { value: r(1, 3), exact: &["A3"], contains: &["A1+A2"] },
            ];
            Ok(first_match(sigma, &rules).unwrap_or(r(1, 2)))
        }
        5 => exact(&[
            ("A4", r(1, 6)),
            ("A3", r(1, 4)),
            ("A1+A2", r(1, 4)),
            ("A2", r(1, 3)),
            ("2A1", r(1, 3)),
            ("A1", r(1, 2)),
        ]),
        6 => exact(&[("A1+A2", r(1, 6)), ("A2", r(1, 4)), ("2A1", r(1, 4)), ("A1", r(1, 3))]),
        7 => exact(&[("A1", r(1, 4))]),
        _ => Err(LctError::Inadmissible { degree, sigma: sigma.to_string() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(expected_lct1(2, &ty("E7")).unwrap(), r(1, 6));
        assert_eq!(expected_lct1(5, &ty("A1")).unwrap(), r(1, 2));
        assert_eq!(expected_lct1(2, &ty("A1+A5'")).unwrap(), r(1, 3));
        assert_eq!(expected_lct1(7, &ty("A1")).unwrap(), r(1, 4));
        assert_eq!(expected_lct1(6, &ty("A1+A2")).unwrap(), r(1, 6));
        assert_eq!(expected_lct1(3, &ty("A1")).unwrap(), r(2, 3));
        assert_eq!(expected_lct1(2, &ty("(3A1)'")).unwrap(), r(1, 2));
        assert_eq!(expected_lct1(2, &ty("(3A1)''")).unwrap(), r(2, 3));
        assert_eq!(expected_lct1(2, &ty("6A1")).unwrap(), r(1, 2));
        assert_eq!(expected_lct1(4, &ty("2A1+A3")).unwrap(), r(1, 4));
    }

    #[test]
    fn degree_two_needs_marks() {
        assert!(matches!(expected_lct1(2, &ty("3A1")), Err(LctError::MissingRefinement(_))));
        assert!(matches!(expected_lct1(2, &ty("A5")), Err(LctError::MissingRefinement(_))));
    }

    #[test]
    fn inadmissible() {
        assert!(expected_lct1(7, &ty("A2")).is_err());
        assert!(expected_lct1(3, &ty("E7")).is_err());
    }

    #[test]
    fn cubic_tables_agree() {
        for t in crate::surface::admissible_types(3).unwrap() {
            assert_eq!(expected_cubic_lct(&t).unwrap(), expected_lct1(3, &t).unwrap(), "{t}");
        }
    }
}
