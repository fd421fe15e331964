//! Dehn twists on punctured surfaces, realized by splicing the twisting
//! curve's word into the twisted curve at each essential crossing.
//!
//! Crossings are enumerated as shared-segment alignments exactly as in the
//! intersection count. Each crossing splices `about^(power * sign)` into the
//! word, based at the rear end of the shared segment; crossings sharing a
//! rear position are parallel strands of the twisting curve and are ordered
//! by their transverse order in the band they form.

use super::linking::ccw_triple;
use super::triangulation::{OEdge, RefTriangulation};
use super::words::{canonical, reduce_cyclic, reverse_word};
use super::{Curve, Repr};
use crate::errors::{Result, TopoError};

struct Crossing {
    /// Rear index into the twisted curve's word: the splice happens just
    /// before this crossing.
    rear_a: usize,
    /// Rotation of the (possibly reversed) twisting word starting at the
    /// shared segment.
    loop_word: Vec<OEdge>,
    /// Orientation side of the crossing; decides the exponent sign.
    side: bool,
    /// Strand ordering key within a shared band (computed lazily between
    /// crossings with equal rear index).
    band_key: BandStrand,
}

/// Identifies a strand of the twisting curve by the alignment that detected
/// it: index into `gamma` (already direction-folded) of its first shared
/// crossing.
#[derive(Clone)]
struct BandStrand {
    gamma: Vec<OEdge>,
    start: usize,
}

fn at(w: &[OEdge], i: isize) -> OEdge {
    let len = w.len() as isize;
    w[(((i % len) + len) % len) as usize]
}

/// Enumerates crossings of `a` with the strand family of `gamma` (one
/// traversal direction).
fn collect_crossings(
    tri: &RefTriangulation,
    a: &[OEdge],
    gamma: &[OEdge],
    out: &mut Vec<Crossing>,
) {
    let m = a.len() as isize;
    let n = gamma.len() as isize;
    for i in 0..m {
        for j in 0..n {
            if at(a, i) != at(gamma, j) {
                continue;
            }
            if at(a, i - 1) == at(gamma, j - 1) {
                continue;
            }
            let mut len = 1isize;
            while at(a, i + len) == at(gamma, j + len) {
                len += 1;
                assert!(len <= m + n, "twisting pair shares an over-long segment");
            }
            let x1 = at(a, i);
            let tb = tri.triangle_of(x1);
            let za = at(a, i - 1).rev();
            let zb = at(gamma, j - 1).rev();
            let side_p = ccw_triple(tri, tb, x1, za, zb);
            let y = at(a, i + len - 1);
            let tf = tri.triangle_of(y.rev());
            let side_f = ccw_triple(tri, tf, y.rev(), at(a, i + len), at(gamma, j + len));
            if side_p != side_f {
                continue;
            }
            let mut loop_word: Vec<OEdge> = Vec::with_capacity(gamma.len());
            for k in 0..n {
                loop_word.push(at(gamma, j + k));
            }
            out.push(Crossing {
                rear_a: i as usize,
                loop_word,
                side: side_p,
                band_key: BandStrand {
                    gamma: gamma.to_vec(),
                    start: ((j % n + n) % n) as usize,
                },
            });
        }
    }
}

/// Transverse order of two parallel strands: walks both strands backwards
/// from their aligned positions until they diverge and reports the side.
/// Returns `true` when the second strand diverges to the counterclockwise
/// side of the first.
fn strand_side(tri: &RefTriangulation, s1: &BandStrand, s2: &BandStrand) -> bool {
    let g1 = &s1.gamma;
    let g2 = &s2.gamma;
    let mut k = 0isize;
    loop {
        let c1 = at(g1, s1.start as isize - 1 - k);
        let c2 = at(g2, s2.start as isize - 1 - k);
        if c1 != c2 {
            // both strands enter the triangle of their next shared crossing
            let x = at(g1, s1.start as isize - k);
            debug_assert_eq!(x, at(g2, s2.start as isize - k));
            let t = tri.triangle_of(x);
            return ccw_triple(tri, t, x, c1.rev(), c2.rev());
        }
        k += 1;
        assert!(
            k <= (g1.len() + g2.len()) as isize,
            "parallel strands never diverge"
        );
    }
}

pub fn dehn_twist(a: &Curve, about: &Curve, power: i64) -> Result<Curve> {
    if power == 0 || a == about {
        return Ok(a.clone());
    }
    match (&a.repr, &about.repr) {
        (Repr::Word(aw), Repr::Word(cw)) => {
            let surface = a.surface();
            let tri = &surface.data().tri;
            if super::linking::intersection_words(tri, aw, cw) == 0 {
                return Ok(a.clone());
            }
            let mut crossings = Vec::new();
            collect_crossings(tri, aw, cw, &mut crossings);
            collect_crossings(tri, aw, &reverse_word(cw), &mut crossings);
            // sort along a; parallel strands at one rear position are
            // ordered transversally within their band
            crossings.sort_by(|u, v| {
                u.rear_a.cmp(&v.rear_a).then_with(|| {
                    if u.band_key.start == v.band_key.start
                        && u.band_key.gamma == v.band_key.gamma
                    {
                        return std::cmp::Ordering::Equal;
                    }
                    let side = strand_side(tri, &u.band_key, &v.band_key);
                    // a band crossing with positive side is traversed by the
                    // twisted curve in band order; with negative side in
                    // reverse band order
                    if side == u.side {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                })
            });
            let mut out: Vec<OEdge> = Vec::new();
            let mut cursor = 0usize;
            for cr in &crossings {
                while cursor < cr.rear_a {
                    out.push(aw[cursor]);
                    cursor += 1;
                }
                let reps = power * if cr.side { 1 } else { -1 };
                let loop_once = if reps > 0 {
                    cr.loop_word.clone()
                } else {
                    reverse_word(&cr.loop_word)
                };
                for _ in 0..reps.unsigned_abs() {
                    out.extend_from_slice(&loop_once);
                }
            }
            out.extend_from_slice(&aw[cursor..]);
            let word = reduce_cyclic(out);
            let word = canonical(&word);
            Curve::from_word(surface, word).map_err(|e| {
                TopoError::InvalidCurve(format!("twist produced an invalid curve: {e}"))
            })
        }
        (Repr::Closed(_), Repr::Closed(_)) => super::closed::dehn_twist(a, about, power),
        _ => unreachable!(),
    }
}
