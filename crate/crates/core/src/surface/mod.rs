//! Surfaces, exact simple closed curves, intersection numbers, twists, and
//! cutting along multicurves.
//!
//! Curves on punctured surfaces are reduced cyclic crossing words against the
//! surface's reference ideal triangulation; the word is the taut position of
//! the curve and its per-edge crossing counts are the curve's normal
//! coordinates. All operations on punctured surfaces are exact. The closed
//! genus-2 surface is carried by a separate layer working in the surface
//! group presented on the standard octagon.

pub mod closed;
pub mod cutting;
pub mod linking;
pub mod slopes;
pub mod triangulation;
pub mod twist;
pub mod words;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::errors::{Result, TopoError};
use triangulation::{
    cone_triangle, polygon_reference, sphere_reference, trace_components, OEdge, RefTriangulation,
};
use words::{canonical, cyclic_period, reduce_cyclic};

/// An orientable surface of finite type, genus `g` with `n` punctures.
/// Supported surfaces have complexity `d = 3g - 3 + n` between 1 and 4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surface {
    genus: u32,
    punctures: u32,
}

impl std::fmt::Debug for Surface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S({},{})", self.genus, self.punctures)
    }
}

impl std::fmt::Display for Surface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S({},{})", self.genus, self.punctures)
    }
}

impl Surface {
    pub fn new(genus: u32, punctures: u32) -> Result<Self> {
        let d = 3 * genus as i64 - 3 + punctures as i64;
        let chi = 2 - 2 * genus as i64 - punctures as i64;
        if chi >= 0 {
            return Err(TopoError::UnsupportedSurface {
                genus,
                punctures,
                reason: format!("euler characteristic {chi} is not negative"),
            });
        }
        if d < 1 {
            return Err(TopoError::UnsupportedSurface {
                genus,
                punctures,
                reason: format!("complexity {d} is below 1"),
            });
        }
        if d > 4 {
            return Err(TopoError::UnsupportedSurface {
                genus,
                punctures,
                reason: format!("complexity {d} exceeds the supported cap 4"),
            });
        }
        Ok(Surface { genus, punctures })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    /// Complexity `d = 3g - 3 + n`, the number of curves in a pants
    /// decomposition.
    pub fn complexity(&self) -> u32 {
        (3 * self.genus as i64 - 3 + self.punctures as i64) as u32
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.punctures as i64
    }

    pub fn is_closed(&self) -> bool {
        self.punctures == 0
    }

    /// The number of pairs of pants in any pants decomposition.
    pub fn pants_count(&self) -> u32 {
        (-self.euler()) as u32
    }

    pub(crate) fn data(&self) -> &'static SurfData {
        static CACHE: OnceLock<Mutex<HashMap<Surface, &'static SurfData>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        if let Some(d) = guard.get(self) {
            return d;
        }
        let data = Box::leak(Box::new(SurfData::build(*self)));
        guard.insert(*self, data);
        data
    }
}

/// Reference data built once per surface.
pub(crate) struct SurfData {
    pub tri: RefTriangulation,
    /// Canonical vertex-link words, indexed by vertex. On punctured
    /// surfaces these are the peripheral classes; on the closed surface the
    /// single entry is null-homotopic.
    pub peripheral: Vec<Vec<OEdge>>,
}

impl SurfData {
    fn build(s: Surface) -> SurfData {
        let tri = if s.genus == 0 {
            sphere_reference(s.punctures as usize).expect("reference")
        } else {
            let mut t = polygon_reference(s.genus as usize).expect("reference");
            // the polygon vertex is the first puncture (or the real vertex
            // when the surface is closed); cone once per extra puncture
            let extra = if s.is_closed() { 0 } else { s.punctures as usize - 1 };
            for k in 0..extra {
                t = cone_triangle(&t, k).expect("coning");
            }
            t
        };
        let peripheral = (0..tri.num_vertices())
            .map(|v| canonical(&tri.vertex_link_word(v)))
            .collect();
        SurfData { tri, peripheral }
    }

    pub fn is_peripheral(&self, word: &[OEdge]) -> bool {
        let c = canonical(word);
        self.peripheral.iter().any(|p| *p == c)
    }
}

/// Internal representation of a curve.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) enum Repr {
    /// Canonical reduced cyclic crossing word on the reference ideal
    /// triangulation (punctured surfaces).
    Word(Vec<OEdge>),
    /// Canonical word in the standard genus-2 surface group (closed case).
    Closed(Vec<i8>),
}

/// An isotopy class of an essential, non-peripheral simple closed curve.
/// Two `Curve` values are equal iff they are isotopic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve {
    surface: Surface,
    pub(crate) repr: Repr,
}

impl std::fmt::Debug for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Curve({})", self.to_text())
    }
}

impl Curve {
    pub fn surface(&self) -> Surface {
        self.surface
    }

    /// Builds a curve from a crossing word on a punctured surface,
    /// validating that it is a primitive, simple, essential, non-peripheral
    /// class.
    pub fn from_word(surface: Surface, word: Vec<OEdge>) -> Result<Curve> {
        if surface.is_closed() {
            return Err(TopoError::NotSupported(
                "crossing words apply to punctured surfaces".into(),
            ));
        }
        let data = surface.data();
        let word = reduce_cyclic(word);
        if word.is_empty() {
            return Err(TopoError::InvalidCurve("null-homotopic".into()));
        }
        if !data.tri.word_is_valid(&word) {
            return Err(TopoError::InvalidCurve("not a valid crossing word".into()));
        }
        if cyclic_period(&word) != word.len() {
            return Err(TopoError::InvalidCurve("word is a proper power".into()));
        }
        if data.is_peripheral(&word) {
            return Err(TopoError::InvalidCurve("peripheral".into()));
        }
        if !linking::is_simple(&data.tri, &word) {
            return Err(TopoError::InvalidCurve("not simple".into()));
        }
        Ok(Curve {
            surface,
            repr: Repr::Word(canonical(&word)),
        })
    }

    /// Builds a curve from normal coordinates against the reference
    /// triangulation.
    pub fn from_normal(surface: Surface, weights: &[u64]) -> Result<Curve> {
        if surface.is_closed() {
            return closed::curve_from_normal(surface, weights);
        }
        let data = surface.data();
        let comps = trace_components(&data.tri, weights)?;
        if comps.len() != 1 {
            return Err(TopoError::InvalidCurve(format!(
                "normal coordinates trace {} components, expected one",
                comps.len()
            )));
        }
        Curve::from_word(surface, comps[0].clone())
    }

    /// Normal coordinates: minimal crossing counts with the edges of the
    /// reference triangulation.
    pub fn normal_coordinates(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Word(w) => self.surface.data().tri.weights(w),
            Repr::Closed(w) => closed::normal_coordinates(self.surface, w),
        }
    }

    pub(crate) fn word(&self) -> &[OEdge] {
        match &self.repr {
            Repr::Word(w) => w,
            Repr::Closed(_) => panic!("closed-surface curve has no crossing word"),
        }
    }

    /// Geometric intersection number.
    pub fn intersection(&self, other: &Curve) -> Result<u64> {
        if self.surface != other.surface {
            return Err(TopoError::SurfaceMismatch(
                self.surface.genus,
                self.surface.punctures,
                other.surface.genus,
                other.surface.punctures,
            ));
        }
        match (&self.repr, &other.repr) {
            (Repr::Word(a), Repr::Word(b)) => {
                Ok(linking::intersection_words(&self.surface.data().tri, a, b))
            }
            (Repr::Closed(a), Repr::Closed(b)) => closed::intersection(a, b),
            _ => unreachable!("curve representations match their surface"),
        }
    }

    /// The image of `self` under the `power`-th right Dehn twist about
    /// `about`.
    pub fn dehn_twist(&self, about: &Curve, power: i64) -> Result<Curve> {
        if self.surface != about.surface {
            return Err(TopoError::SurfaceMismatch(
                self.surface.genus,
                self.surface.punctures,
                about.surface.genus,
                about.surface.punctures,
            ));
        }
        twist::dehn_twist(self, about, power)
    }

    /// Serializes to the text form `S(g,n):normal:[w0,w1,...]` or, on
    /// complexity-1 surfaces, `S(g,n):slope:p/q`.
    pub fn to_text(&self) -> String {
        if self.surface.complexity() == 1 {
            if let Some((p, q)) = slopes::slope_of(self) {
                return format!("{}:slope:{}/{}", self.surface, p, q);
            }
        }
        let w = self.normal_coordinates();
        let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        format!("{}:normal:[{}]", self.surface, ws.join(","))
    }

    /// Parses the text form produced by [`Curve::to_text`].
    pub fn from_text(text: &str) -> Result<Curve> {
        let (surf, rest) = parse_surface_prefix(text)?;
        if let Some(body) = rest.strip_prefix("slope:") {
            let (p, q) = parse_slope(body)?;
            return slopes::curve_from_slope(surf, p, q);
        }
        if let Some(body) = rest.strip_prefix("normal:") {
            let body = body
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| TopoError::Parse("normal form needs [..]".into()))?;
            let weights: Vec<u64> = if body.trim().is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u64>()
                            .map_err(|e| TopoError::Parse(format!("bad weight: {e}")))
                    })
                    .collect::<Result<_>>()?
            };
            return Curve::from_normal(surf, &weights);
        }
        Err(TopoError::Parse(format!("unrecognized curve text: {text}")))
    }
}

fn parse_surface_prefix(text: &str) -> Result<(Surface, &str)> {
    let rest = text
        .strip_prefix("S(")
        .ok_or_else(|| TopoError::Parse("expected S(g,n): prefix".into()))?;
    let close = rest
        .find(')')
        .ok_or_else(|| TopoError::Parse("expected closing paren".into()))?;
    let inner = &rest[..close];
    let mut it = inner.split(',');
    let g: u32 = it
        .next()
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| TopoError::Parse("bad genus".into()))?;
    let n: u32 = it
        .next()
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| TopoError::Parse("bad puncture count".into()))?;
    let tail = rest[close + 1..]
        .strip_prefix(':')
        .ok_or_else(|| TopoError::Parse("expected ':' after surface".into()))?;
    Ok((Surface::new(g, n)?, tail))
}

fn parse_slope(body: &str) -> Result<(i64, i64)> {
    let mut it = body.split('/');
    let p: i64 = it
        .next()
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| TopoError::Parse("bad slope numerator".into()))?;
    let q: i64 = it
        .next()
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| TopoError::Parse("bad slope denominator".into()))?;
    Ok((p, q))
}

/// A system of pairwise disjoint, pairwise non-isotopic essential curves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Multicurve {
    surface: Surface,
    components: Vec<Curve>,
}

impl Multicurve {
    pub fn new(surface: Surface, mut components: Vec<Curve>) -> Result<Multicurve> {
        components.sort();
        components.dedup();
        if components.len() > surface.complexity() as usize {
            return Err(TopoError::InvalidMulticurve(format!(
                "{} components exceed the complexity {}",
                components.len(),
                surface.complexity()
            )));
        }
        for c in &components {
            if c.surface() != surface {
                return Err(TopoError::InvalidMulticurve("component on wrong surface".into()));
            }
        }
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if components[i].intersection(&components[j])? != 0 {
                    return Err(TopoError::InvalidMulticurve(
                        "components are not disjoint".into(),
                    ));
                }
            }
        }
        Ok(Multicurve {
            surface,
            components,
        })
    }

    pub fn empty(surface: Surface) -> Multicurve {
        Multicurve {
            surface,
            components: Vec::new(),
        }
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn components(&self) -> &[Curve] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, c: &Curve) -> bool {
        self.components.contains(c)
    }

    /// Removes one component, keeping the rest.
    pub fn without(&self, c: &Curve) -> Multicurve {
        Multicurve {
            surface: self.surface,
            components: self
                .components
                .iter()
                .filter(|x| *x != c)
                .cloned()
                .collect(),
        }
    }
}

/// Geometric intersection number of a pair of curves on one surface.
pub fn intersection(a: &Curve, b: &Curve) -> Result<u64> {
    a.intersection(b)
}

/// Right Dehn twist power applied to a curve.
pub fn dehn_twist(a: &Curve, about: &Curve, power: i64) -> Result<Curve> {
    a.dehn_twist(about, power)
}

pub use cutting::{cut_pieces, SubsurfaceSpec};
