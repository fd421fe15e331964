//! Exact geometric intersection numbers for curves held as reduced cyclic
//! crossing words.
//!
//! Two taut strands in the universal cover cross if and only if they share a
//! segment of crossings and diverge to opposite sides at its two ends. Shared
//! segments are enumerated over occurrence alignments of the two cyclic
//! words; each strand pair is counted once, at the rear end of its maximal
//! common segment. Divergence sides are read off from the counterclockwise
//! order of the three sides of the triangle where the strands split.

use super::triangulation::{OEdge, RefTriangulation};
use super::words::{canonical, reverse_word};

/// Whether `(p, q, r)` is a counterclockwise reading of the sides of
/// triangle `t`. All three must be sides of `t`, pairwise distinct.
fn ccw_triple(tri: &RefTriangulation, t: usize, p: OEdge, q: OEdge, r: OEdge) -> bool {
    let tr = tri.triangles[t];
    let pos = |x: OEdge| tr.iter().position(|&s| s == x).expect("side of triangle");
    let (i, j, k) = (pos(p), pos(q), pos(r));
    (j + 3 - i) % 3 == 1 && (k + 3 - j) % 3 == 1 || (j + 3 - i) % 3 == 2 && (k + 3 - j) % 3 == 2
}

/// Counts crossings between taut strands of `a` and of `b` that traverse
/// some shared segment in the given mutual direction. `a` and `b` must be
/// valid reduced cyclic words of distinct primitive classes (up to
/// orientation reversal of `b`, which the caller folds in).
fn count_aligned(tri: &RefTriangulation, a: &[OEdge], b: &[OEdge]) -> u64 {
    let m = a.len();
    let n = b.len();
    let mut crossings = 0u64;
    let at = |w: &[OEdge], i: isize| -> OEdge {
        let len = w.len() as isize;
        w[(((i % len) + len) % len) as usize]
    };
    for i in 0..m as isize {
        for j in 0..n as isize {
            if at(a, i) != at(b, j) {
                continue;
            }
            // rear-maximal: count each strand pair at the first shared edge
            if at(a, i - 1) == at(b, j - 1) {
                continue;
            }
            // forward extension
            let mut len = 1isize;
            while at(a, i + len) == at(b, j + len) {
                len += 1;
                assert!(
                    len <= (m + n) as isize,
                    "strands share an over-long segment; classes not distinct?"
                );
            }
            // rear divergence: both strands leave triangle t_b through a[i]
            let x1 = at(a, i);
            let tb = tri.triangle_of(x1);
            let za = at(a, i - 1).rev();
            let zb = at(b, j - 1).rev();
            debug_assert_eq!(tri.triangle_of(za), tb);
            debug_assert_eq!(tri.triangle_of(zb), tb);
            let side_p = ccw_triple(tri, tb, x1, za, zb);
            // front divergence: both strands entered triangle t_f through
            // the last shared crossing
            let y = at(a, i + len - 1);
            let tf = tri.triangle_of(y.rev());
            let ea = at(a, i + len);
            let eb = at(b, j + len);
            debug_assert_eq!(tri.triangle_of(ea), tf);
            debug_assert_eq!(tri.triangle_of(eb), tf);
            let side_f = ccw_triple(tri, tf, y.rev(), ea, eb);
            if side_p == side_f {
                crossings += 1;
            }
        }
    }
    crossings
}

/// Geometric intersection number of two curves given as reduced cyclic
/// crossing words. Isotopic curves yield zero.
pub fn intersection_words(tri: &RefTriangulation, a: &[OEdge], b: &[OEdge]) -> u64 {
    if canonical(a) == canonical(b) {
        return 0;
    }
    count_aligned(tri, a, b) + count_aligned(tri, a, &reverse_word(b))
}

/// Whether the curve word is embeddable (has no essential self-crossing).
pub fn is_simple(tri: &RefTriangulation, a: &[OEdge]) -> bool {
    let m = a.len() as isize;
    let at = |w: &[OEdge], i: isize| -> OEdge {
        let len = w.len() as isize;
        w[(((i % len) + len) % len) as usize]
    };
    // same-direction strand pairs: distinct shifts of the same word
    for shift in 1..m {
        for i in 0..m {
            let j = i + shift;
            if at(a, i) != at(a, j) {
                continue;
            }
            if at(a, i - 1) == at(a, j - 1) {
                continue;
            }
            let mut len = 1isize;
            while at(a, i + len) == at(a, j + len) {
                len += 1;
                if len > 2 * m {
                    // periodic overlap: non-primitive word
                    return false;
                }
            }
            let x1 = at(a, i);
            let tb = tri.triangle_of(x1);
            let za = at(a, i - 1).rev();
            let zb = at(a, j - 1).rev();
            let side_p = ccw_triple(tri, tb, x1, za, zb);
            let y = at(a, i + len - 1);
            let tf = tri.triangle_of(y.rev());
            let side_f = ccw_triple(tri, tf, y.rev(), at(a, i + len), at(a, j + len));
            if side_p == side_f {
                return false;
            }
        }
    }
    // opposite-direction strand pairs
    let ar = reverse_word(a);
    for i in 0..m {
        'inner: for j in 0..m {
            if at(a, i) != at(&ar, j) {
                continue;
            }
            if at(a, i - 1) == at(&ar, j - 1) {
                continue;
            }
            let mut len = 1isize;
            while at(a, i + len) == at(&ar, j + len) {
                len += 1;
                if len > 2 * m {
                    // the strand is aligned with its own reversal: same
                    // unoriented line, not a transverse pair
                    continue 'inner;
                }
            }
            let x1 = at(a, i);
            let tb = tri.triangle_of(x1);
            let za = at(a, i - 1).rev();
            let zb = at(&ar, j - 1).rev();
            if za == zb {
                // the alignment maps the strand onto its own reversal along
                // this window; no transverse pair here
                continue;
            }
            let side_p = ccw_triple(tri, tb, x1, za, zb);
            let y = at(a, i + len - 1);
            let tf = tri.triangle_of(y.rev());
            let ea = at(a, i + len);
            let eb = at(&ar, j + len);
            if ea == eb {
                continue;
            }
            let side_f = ccw_triple(tri, tf, y.rev(), ea, eb);
            if side_p == side_f {
                return false;
            }
        }
    }
    true
}
