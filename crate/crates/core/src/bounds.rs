//! Lower bounds, triple classification and closed-form exact values.

use crate::construct3d;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

fn ceil_div(num: i128, den: i128) -> i128 {
    -((-num).div_euclid(den))
}

/// Edge-counting bound: a percolating set `A` of an `r`-neighbour process
/// satisfies `|A| >= |V| + ceil((e(A) - |E|) / r)`.
pub fn general_lower_bound(vertices: u64, edges: u64, edges_in_seed: u64, r: u64) -> Result<i64> {
    if r == 0 {
        return Err(Error::InvalidParameters("threshold must be at least 1".into()));
    }
    let bound = vertices as i128 + ceil_div(edges_in_seed as i128 - edges as i128, r as i128);
    Ok(bound as i64)
}

/// Surface-area bound for the `d`-neighbour process on `[a1] x ... x [ad]`:
/// `ceil(sum_j prod_{i != j} a_i / d)`.
pub fn perimeter_lower_bound(dims: &[u64]) -> Result<u64> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidParameters(format!("invalid dims {dims:?}")));
    }
    let faces: u128 = (0..dims.len())
        .map(|j| {
            dims.iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, &a)| a as u128)
                .product::<u128>()
        })
        .sum();
    Ok(faces.div_ceil(dims.len() as u128) as u64)
}

/// `(a1 a2 + a1 a3 + a2 a3) mod 3`.
pub fn triple_class(a1: u64, a2: u64, a3: u64) -> u8 {
    let (a1, a2, a3) = (a1 % 3, a2 % 3, a3 % 3);
    ((a1 * a2 + a1 * a3 + a2 * a3) % 3) as u8
}

/// Lower bound for the 3-neighbour process on the torus `T(a1, a2, a3)`.
pub fn torus_lower_bound(a1: u64, a2: u64, a3: u64) -> u64 {
    let (b1, b2, b3) = (a1 - 1, a2 - 1, a3 - 1);
    (b1 * b2 + b1 * b3 + b2 * b3).div_ceil(3) + 1
}

/// Instances with a closed-form value of `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "case")]
pub enum KnownCase {
    /// `[a1] x ... x [ad]` under the 2-neighbour process.
    TwoNeighbour { dims: Vec<u64> },
    /// The hypercube `[2]^d` under the 3-neighbour process.
    HypercubeThree { d: u32 },
    /// The `n x n` grid under the 3-neighbour process.
    SquareThree { n: u64 },
    /// `[n]^d` under the `d`-neighbour process.
    CubeDiagonal { n: u64, d: u32 },
    /// The `n x n` torus under the 3-neighbour process, `n >= 3`.
    TorusSquareThree { n: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Formula,
    Construction,
    Search,
    PaperCitation,
}

fn is_mersenne(n: u64) -> bool {
    (n + 1).is_power_of_two()
}

/// The exact value of `m` for the given instance, if a closed form applies.
pub fn known_exact(case: &KnownCase) -> Option<(u64, Provenance)> {
    let value = match *case {
        KnownCase::TwoNeighbour { ref dims } => {
            if dims.is_empty() || dims.contains(&0) {
                return None;
            }
            dims.iter().map(|a| a - 1).sum::<u64>().div_ceil(2) + 1
        }
        // Below d = 3 every vertex has degree under 3, so all of them are needed.
        KnownCase::HypercubeThree { d } if d < 3 => 1u64 << d,
        KnownCase::HypercubeThree { d } if d <= 62 => {
            let d = d as u64;
            (d * (d + 3)).div_ceil(6) + 1
        }
        KnownCase::HypercubeThree { .. } => return None,
        KnownCase::SquareThree { n: 0 } => return None,
        KnownCase::SquareThree { n } => {
            let s = n * n + 2 * n;
            if n % 2 == 0 {
                (s + 4).div_ceil(3)
            } else if is_mersenne(n) {
                s / 3
            } else if n % 6 == 5 {
                (s + 1) / 3
            } else {
                s / 3 + 1
            }
        }
        KnownCase::CubeDiagonal { n, d } => {
            if n == 0 || d == 0 {
                return None;
            }
            n.checked_pow(d - 1)?
        }
        KnownCase::TorusSquareThree { n } if n >= 3 => (n * n + 1).div_ceil(3),
        KnownCase::TorusSquareThree { .. } => return None,
    };
    Some((value, Provenance::Formula))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Perfect,
    Optimal,
    NotPerfect,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub triple: [u64; 3],
    pub class: u8,
    pub perimeter_lb: u64,
    pub status: Status,
    pub value: Option<u64>,
    pub provenance: Option<Provenance>,
}

/// Classifies a triple using only proven results: constructions the builder
/// covers, the planar characterization of perfect `(a, b, 1)`, the square
/// grid values and the exhaustive result for `(2, 3, 3)`.
pub fn triple_report(a1: u64, a2: u64, a3: u64) -> Result<TripleReport> {
    let lb = perimeter_lower_bound(&[a1, a2, a3])?;
    let class = triple_class(a1, a2, a3);
    let mut sorted = [a1, a2, a3];
    sorted.sort_unstable();
    let report = |status, value, provenance| TripleReport {
        triple: [a1, a2, a3],
        class,
        perimeter_lb: lb,
        status,
        value,
        provenance,
    };
    let fits = |a: u64| usize::try_from(a).is_ok_and(|a| a <= u32::MAX as usize);
    if sorted.iter().all(|&a| fits(a)) && construct3d::is_covered(sorted.map(|a| a as usize)) {
        let status = if class == 0 { Status::Perfect } else { Status::Optimal };
        return Ok(report(status, Some(lb), Some(Provenance::Construction)));
    }
    if sorted[0] == 1 {
        let (a, b) = (sorted[1], sorted[2]);
        if a == b {
            let (value, _) = known_exact(&KnownCase::SquareThree { n: a }).expect("n >= 1");
            let status = match (value == lb, class) {
                (true, 0) => Status::Perfect,
                (true, _) => Status::Optimal,
                (false, _) => Status::NotPerfect,
            };
            return Ok(report(status, Some(value), Some(Provenance::PaperCitation)));
        }
        if class == 0 {
            return Ok(report(Status::NotPerfect, None, Some(Provenance::PaperCitation)));
        }
    }
    if sorted == [2, 3, 3] {
        return Ok(report(Status::NotPerfect, None, Some(Provenance::PaperCitation)));
    }
    Ok(report(Status::Unknown, None, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_bound_examples() {
        assert_eq!(general_lower_bound(9, 12, 0, 3).unwrap(), 5);
        assert_eq!(general_lower_bound(9, 12, 12, 3).unwrap(), 9);
        assert_eq!(general_lower_bound(8, 12, 0, 3).unwrap(), 4);
        // ceil(-13 / 3) = -4
        assert_eq!(general_lower_bound(10, 13, 0, 3).unwrap(), 6);
        assert!(general_lower_bound(1, 0, 0, 0).is_err());
    }

    #[test]
    fn general_bound_matches_perimeter_on_grids() {
        // For the r = d process on a box, |V| - |E| / d equals the face sum
        // over d, so the two bounds agree when A is independent.
        for dims in [[3u64, 3, 3], [2, 3, 6], [5, 6, 9], [11, 12, 13], [1, 4, 7]] {
            let v: u64 = dims.iter().product();
            let e: u64 = (0..3)
                .map(|j| {
                    (dims[j] - 1)
                        * dims
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != j)
                            .map(|(_, a)| a)
                            .product::<u64>()
                })
                .sum();
            assert_eq!(
                general_lower_bound(v, e, 0, 3).unwrap(),
                perimeter_lower_bound(&dims).unwrap() as i64,
                "{dims:?}"
            );
        }
    }

    #[test]
    fn perimeter_examples() {
        assert_eq!(perimeter_lower_bound(&[11, 11, 11]).unwrap(), 121);
        assert_eq!(perimeter_lower_bound(&[1]).unwrap(), 1);
        assert_eq!(perimeter_lower_bound(&[5, 5, 5]).unwrap(), 25);
        assert_eq!(perimeter_lower_bound(&[3, 3]).unwrap(), 3);
        assert_eq!(perimeter_lower_bound(&[11, 12, 13]).unwrap(), 144);
        assert!(perimeter_lower_bound(&[]).is_err());
    }

    #[test]
    fn class_examples() {
        assert_eq!(triple_class(2, 3, 6), 0);
        assert_eq!(triple_class(1, 1, 1), 0);
        assert_eq!(triple_class(5, 5, 6), 1);
        for a in 1..20 {
            for b in 1..20 {
                for c in 1..20 {
                    assert_eq!(triple_class(a, b, c) as u64, (a * b + a * c + b * c) % 3);
                }
            }
        }
    }

    #[test]
    fn torus_bound_example() {
        assert_eq!(torus_lower_bound(12, 12, 12), 122);
    }

    #[test]
    fn closed_forms() {
        let sq = |n| known_exact(&KnownCase::SquareThree { n }).unwrap().0;
        assert_eq!((1..=5).map(sq).collect::<Vec<_>>(), vec![1, 4, 5, 10, 12]);
        assert_eq!(sq(7), 21);
        assert_eq!(sq(9), 34);
        assert_eq!(sq(11), 48);
        let two = |dims: &[u64]| known_exact(&KnownCase::TwoNeighbour { dims: dims.to_vec() }).unwrap().0;
        assert_eq!(two(&[3, 5]), 4);
        assert_eq!(two(&[4, 4]), 4);
        assert_eq!(two(&[1]), 1);
        let cube = |d| known_exact(&KnownCase::HypercubeThree { d }).unwrap().0;
        assert_eq!(cube(2), 4);
        assert_eq!(cube(3), 4);
        assert_eq!(cube(4), 6);
        assert_eq!(known_exact(&KnownCase::CubeDiagonal { n: 5, d: 3 }).unwrap().0, 25);
        assert_eq!(known_exact(&KnownCase::TorusSquareThree { n: 4 }).unwrap().0, 6);
        assert!(known_exact(&KnownCase::TorusSquareThree { n: 2 }).is_none());
    }

    #[test]
    fn reports() {
        let r = triple_report(11, 12, 13).unwrap();
        assert_eq!(
            (r.status, r.value, r.provenance),
            (Status::Optimal, Some(144), Some(Provenance::Construction))
        );
        let r = triple_report(3, 3, 1).unwrap();
        assert_eq!((r.status, r.value), (Status::Perfect, Some(5)));
        let r = triple_report(2, 3, 3).unwrap();
        assert_eq!((r.class, r.perimeter_lb, r.status), (0, 7, Status::NotPerfect));
        assert_eq!(triple_report(3, 3, 2).unwrap().status, Status::NotPerfect);
        assert_eq!(triple_report(9, 9, 1).unwrap().status, Status::NotPerfect);
        assert_eq!(triple_report(3, 9, 1).unwrap().status, Status::NotPerfect);
        assert_eq!(triple_report(5, 5, 1).unwrap().status, Status::Optimal);
        assert_eq!(triple_report(4, 4, 4).unwrap().status, Status::Perfect);
        assert_eq!(triple_report(2, 2, 9).unwrap().status, Status::Unknown);
    }

    #[test]
    fn report_invariants() {
        for a in 1..=14u64 {
            for b in a..=14 {
                for c in b..=14 {
                    let r = triple_report(a, b, c).unwrap();
                    assert_eq!(r.class, triple_class(a, b, c));
                    match r.status {
                        Status::Perfect => {
                            assert_eq!(r.class, 0);
                            assert_eq!(r.value, Some(r.perimeter_lb));
                        }
                        Status::Optimal => assert_eq!(r.value, Some(r.perimeter_lb)),
                        _ => {}
                    }
                }
            }
        }
    }
}
