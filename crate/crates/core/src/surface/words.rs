//! Reduced cyclic crossing words and their canonical forms.

use super::triangulation::OEdge;

/// Freely reduces a crossing word, including across the cyclic seam.
/// Cancels immediate backtracks `x, x.rev()`.
pub fn reduce_cyclic(mut word: Vec<OEdge>) -> Vec<OEdge> {
    loop {
        let mut out: Vec<OEdge> = Vec::with_capacity(word.len());
        for oe in word {
            if out.last() == Some(&oe.rev()) {
                out.pop();
            } else {
                out.push(oe);
            }
        }
        // cyclic seam
        let mut changed = false;
        while out.len() >= 2 && out.first() == Some(&out.last().unwrap().rev()) {
            out.pop();
            out.remove(0);
            changed = true;
        }
        if !changed {
            return out;
        }
        word = out;
    }
}

/// The reversed traversal of a crossing word.
pub fn reverse_word(word: &[OEdge]) -> Vec<OEdge> {
    word.iter().rev().map(|oe| oe.rev()).collect()
}

fn min_rotation(word: &[OEdge]) -> Vec<OEdge> {
    let m = word.len();
    let mut best: Option<Vec<OEdge>> = None;
    for i in 0..m {
        let mut rot: Vec<OEdge> = Vec::with_capacity(m);
        rot.extend_from_slice(&word[i..]);
        rot.extend_from_slice(&word[..i]);
        if best.as_ref().map_or(true, |b| rot < *b) {
            best = Some(rot);
        }
    }
    best.unwrap_or_default()
}

/// Canonical representative of an unoriented free homotopy class: the
/// lexicographically least rotation of the word or its reversal.
pub fn canonical(word: &[OEdge]) -> Vec<OEdge> {
    if word.is_empty() {
        return Vec::new();
    }
    let a = min_rotation(word);
    let b = min_rotation(&reverse_word(word));
    if a <= b {
        a
    } else {
        b
    }
}

/// Smallest rotation period of a cyclic word; the word is primitive iff this
/// equals its length.
pub fn cyclic_period(word: &[OEdge]) -> usize {
    let m = word.len();
    'outer: for p in 1..=m {
        if m % p != 0 {
            continue;
        }
        for i in 0..m {
            if word[i] != word[(i + p) % m] {
                continue 'outer;
            }
        }
        return p;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oe(e: usize, pos: bool) -> OEdge {
        OEdge::new(e, pos)
    }

    #[test]
    fn reduction_cancels_backtracks() {
        let w = vec![oe(0, true), oe(1, true), oe(1, false), oe(2, true)];
        assert_eq!(reduce_cyclic(w), vec![oe(0, true), oe(2, true)]);
    }

    #[test]
    fn reduction_cancels_across_seam() {
        let w = vec![oe(1, false), oe(0, true), oe(2, true), oe(1, true)];
        assert_eq!(reduce_cyclic(w), vec![oe(0, true), oe(2, true)]);
    }

    #[test]
    fn canonical_is_rotation_invariant() {
        let w = vec![oe(2, true), oe(0, false), oe(1, true)];
        let mut rot = w.clone();
        rot.rotate_left(1);
        assert_eq!(canonical(&w), canonical(&rot));
        assert_eq!(canonical(&w), canonical(&reverse_word(&w)));
    }

    #[test]
    fn period_detects_powers() {
        let w = vec![oe(0, true), oe(1, true), oe(0, true), oe(1, true)];
        assert_eq!(cyclic_period(&w), 2);
        let v = vec![oe(0, true), oe(1, true), oe(0, false)];
        assert_eq!(cyclic_period(&v), 3);
    }
}
