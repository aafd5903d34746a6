//! Weyl group elements, dominant representatives, the orbit of rho, and the
//! 72 positive systems containing the fixed compact system.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::linalg::RatMat;
use crate::roots::{dot2, reflect2, Amb2, RootSystemTables};
use crate::weight::{Frame, Weight};
use crate::Rat;

/// Order of the full Weyl group W(E7).
pub const WEYL_ORDER: u64 = 2_903_040;
/// Order of the compact Weyl group W(su(8)) = S8.
pub const WEYL_K_ORDER: u64 = 40_320;
/// Number of positive systems containing the fixed compact system.
pub const CHAMBER_COUNT: usize = 72;

/// A Weyl group element stored as an exact orthogonal matrix, optionally
/// with a reduced word in the simple reflections (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: RatMat,
    pub word: Option<Vec<u8>>,
}

impl WeylElement {
    pub fn identity() -> Self {
        Self { matrix: RatMat::identity(8), word: Some(Vec::new()) }
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        self.matrix.apply(v)
    }
}

/// Rejection reasons for length computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylError {
    /// The matrix does not permute the root set.
    NotRootPermuting,
}

impl core::fmt::Display for WeylError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            WeylError::NotRootPermuting => write!(f, "matrix does not permute the roots"),
        }
    }
}

impl core::error::Error for WeylError {}

/// Which positive system a dominance question refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum System {
    /// The fixed base positive system of the full root system.
    G,
    /// The compact subsystem.
    K,
}

/// One of the 72 positive systems containing the compact one.
#[derive(Clone, Debug)]
pub struct Chamber {
    /// Canonical index, 0..72.
    pub index: usize,
    /// The element sending the base chamber here.
    pub w: WeylElement,
    /// Half sum of its positive roots (doubled integer ambient coords).
    pub rho_j2: Amb2,
    /// Half sum of its positive noncompact roots (doubled).
    pub rho_n_j2: Amb2,
    /// Length of `w`.
    pub length: usize,
    /// varpi coordinates of rho_n (integers).
    pub rho_n_varpi: [i64; 7],
    /// Images of the simple roots under `w` (doubled).
    pub simple_image2: [Amb2; 7],
    /// Images of the fundamental weights under `w` (exact ambient).
    pub fw_image: Vec<Vec<Rat>>,
}

impl Chamber {
    pub fn rho_j(&self) -> Vec<Rat> {
        self.rho_j2.iter().map(|&c| crate::ratio(c, 2)).collect()
    }

    pub fn rho_n_j(&self) -> Vec<Rat> {
        self.rho_n_j2.iter().map(|&c| crate::ratio(c, 2)).collect()
    }
}

fn simples<'t>(tables: &'t RootSystemTables, system: System) -> &'t [Amb2; 7] {
    match system {
        System::G => &tables.simple_g2,
        System::K => &tables.simple_k2,
    }
}

/// Walk an integer (doubled) vector to the dominant chamber of the chosen
/// system. Returns the dominant vector and the reflection word applied,
/// outermost last: `w = s_{word[last]} ... s_{word[0]}` maps the input to
/// the output.
pub fn descend_to_dominant2(
    tables: &RootSystemTables,
    v: &Amb2,
    system: System,
) -> (Amb2, Vec<u8>) {
    let gens = simples(tables, system);
    let mut cur = *v;
    let mut word = Vec::new();
    'outer: loop {
        for (i, a) in gens.iter().enumerate() {
            if dot2(&cur, a) < 0 {
                cur = reflect2(&cur, a);
                word.push(i as u8);
                continue 'outer;
            }
        }
        return (cur, word);
    }
}

/// Exact-rational version of [`descend_to_dominant2`].
pub fn descend_to_dominant(
    tables: &RootSystemTables,
    v: &[Rat],
    system: System,
) -> (Vec<Rat>, Vec<u8>) {
    let gens = simples(tables, system);
    let mut cur = v.to_vec();
    let mut word = Vec::new();
    'outer: loop {
        for (i, a) in gens.iter().enumerate() {
            let p = tables.pair_rat_amb2(&cur, a);
            if p.is_negative() {
                // s_a(v) = v - B(v, a) a with a of squared length 2.
                for k in 0..8 {
                    cur[k] -= &p * crate::ratio(a[k], 2);
                }
                word.push(i as u8);
                continue 'outer;
            }
        }
        return (cur, word);
    }
}

/// The dominant representative of `w` together with the element that maps
/// the input to it. Idempotent on dominant input.
pub fn dominant_representative(
    tables: &RootSystemTables,
    w: &Weight,
    system: System,
) -> (Weight, WeylElement) {
    let ambient = tables.to_ambient(w).expect("weight in root span");
    let (dom, word) = descend_to_dominant(tables, &ambient, system);
    let elem = element_from_word(tables, &word, system);
    (Weight::new(dom, Frame::Ambient), elem)
}

/// Build the matrix of `s_{word[last]} ... s_{word[0]}`.
pub fn element_from_word(
    tables: &RootSystemTables,
    word: &[u8],
    system: System,
) -> WeylElement {
    let gens = simples(tables, system);
    let mut m = RatMat::identity(8);
    for &i in word {
        m = reflection_matrix(&gens[i as usize]).mul(&m);
    }
    WeylElement { matrix: m, word: Some(word.to_vec()) }
}

/// The reflection in a (doubled) root as an exact 8x8 matrix.
pub fn reflection_matrix(alpha2: &Amb2) -> RatMat {
    let mut m = RatMat::identity(8);
    for i in 0..8 {
        for j in 0..8 {
            // I - alpha alpha^T for a squared-length-2 root.
            m[(i, j)] -= crate::ratio(alpha2[i] * alpha2[j], 4);
        }
    }
    m
}

/// Number of positive roots sent negative. Rejects matrices that fail to
/// permute the root set.
pub fn weyl_length(tables: &RootSystemTables, w: &WeylElement) -> Result<usize, WeylError> {
    let mut count = 0;
    for r in &tables.roots {
        let image = w.apply(&r.amb2.iter().map(|&c| crate::ratio(c, 2)).collect::<Vec<_>>());
        let img2 = match crate::roots::try_amb2(&image) {
            Some(v) => v,
            None => return Err(WeylError::NotRootPermuting),
        };
        let hit = tables.roots.iter().find(|s| s.amb2 == img2);
        let hit = match hit {
            Some(h) => h,
            None => return Err(WeylError::NotRootPermuting),
        };
        if r.positive && !hit.positive {
            count += 1;
        }
    }
    Ok(count)
}

fn pack(v: &Amb2) -> u64 {
    let mut out = 0u64;
    for (k, &c) in v.iter().enumerate() {
        debug_assert!((-128..128).contains(&c));
        out |= ((c as i8 as u8) as u64) << (8 * k);
    }
    out
}

fn unpack(x: u64) -> Amb2 {
    let mut v = [0i64; 8];
    for (k, c) in v.iter_mut().enumerate() {
        *c = ((x >> (8 * k)) as u8 as i8) as i64;
    }
    v
}

/// Size of the full Weyl orbit of rho, computed by breadth-first closure.
/// Doubled coordinates of every orbit point fit in a byte, so points are
/// packed into `u64` keys.
pub fn rho_orbit_size(tables: &RootSystemTables) -> usize {
    let start = pack(&tables.rho2);
    let mut seen: hashbrown::HashSet<u64> =
        hashbrown::HashSet::with_capacity(3_100_000);
    seen.insert(start);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &p in &frontier {
            let v = unpack(p);
            for a in &tables.simple_g2 {
                let r = pack(&reflect2(&v, a));
                if seen.insert(r) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    seen.len()
}

/// Enumerate the 72 chambers: traverse the Weyl orbit of rho, keep the
/// points dominant for the compact system, and order them by
/// (length, varpi coordinates of rho_n). Panics if the orbit size is not
/// the full Weyl order — that would mean the root data is wrong.
pub fn chambers(tables: &RootSystemTables) -> Vec<Chamber> {
    let start = pack(&tables.rho2);
    let mut seen: hashbrown::HashSet<u64> =
        hashbrown::HashSet::with_capacity(3_100_000);
    seen.insert(start);
    let mut frontier = vec![start];
    let mut k_dominant: Vec<Amb2> = Vec::new();
    let check_dominant = |v: &Amb2| tables.simple_k2.iter().all(|g| dot2(v, g) > 0);
    if check_dominant(&tables.rho2) {
        k_dominant.push(tables.rho2);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &p in &frontier {
            let v = unpack(p);
            for a in &tables.simple_g2 {
                let r = reflect2(&v, a);
                let key = pack(&r);
                if seen.insert(key) {
                    if check_dominant(&r) {
                        k_dominant.push(r);
                    }
                    next.push(key);
                }
            }
        }
        frontier = next;
    }
    assert_eq!(seen.len(), WEYL_ORDER as usize, "Weyl orbit of rho has the wrong size");
    assert_eq!(k_dominant.len(), CHAMBER_COUNT, "wrong number of compact-dominant points");

    let mut built: Vec<Chamber> = k_dominant
        .into_iter()
        .map(|rho_j2| {
            // Find w with w rho = rho_j by walking rho_j back to rho.
            let (dom, word_to_dom) = descend_to_dominant2(tables, &rho_j2, System::G);
            assert_eq!(dom, tables.rho2);
            // word_to_dom maps rho_j -> rho, so reverse it for w.
            let word: Vec<u8> = word_to_dom.iter().rev().copied().collect();
            let w = element_from_word(tables, &word, System::G);
            let mut rho_n_j2 = rho_j2;
            for k in 0..8 {
                rho_n_j2[k] -= tables.rho_c2[k];
            }
            let mut rho_n_varpi = [0i64; 7];
            for (i, g) in tables.simple_k2.iter().enumerate() {
                let p4 = dot2(&rho_n_j2, g);
                debug_assert_eq!(p4 % 4, 0);
                rho_n_varpi[i] = p4 / 4;
            }
            let mut simple_image2 = [[0i64; 8]; 7];
            let mut fw_image = Vec::with_capacity(7);
            for i in 0..7 {
                let img = w.apply(&tables.simple_g2[i].iter().map(|&c| crate::ratio(c, 2)).collect::<Vec<_>>());
                simple_image2[i] = crate::roots::try_amb2(&img).expect("root image is a root");
                fw_image.push(w.apply(&tables.fw_g[i]));
            }
            let length = word.len();
            Chamber {
                index: usize::MAX,
                w,
                rho_j2,
                rho_n_j2,
                length,
                rho_n_varpi,
                simple_image2,
                fw_image,
            }
        })
        .collect();

    built.sort_by(|a, b| (a.length, a.rho_n_varpi).cmp(&(b.length, b.rho_n_varpi)));
    for (i, c) in built.iter_mut().enumerate() {
        c.index = i;
    }
    assert_eq!(built[0].length, 0, "base chamber must sort first");
    built
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::roots::RootSystemTables;

    fn tables() -> RootSystemTables {
        RootSystemTables::build()
    }

    #[test]
    fn identity_and_simple_reflection_lengths() {
        let t = tables();
        assert_eq!(weyl_length(&t, &WeylElement::identity()).unwrap(), 0);
        for i in 0..7 {
            let w = element_from_word(&t, &[i], System::G);
            assert_eq!(weyl_length(&t, &w).unwrap(), 1);
        }
    }

    #[test]
    fn non_permuting_matrix_rejected() {
        let t = tables();
        let mut m = RatMat::identity(8);
        m[(0, 0)] = rat(2);
        let w = WeylElement { matrix: m, word: None };
        assert_eq!(weyl_length(&t, &w), Err(WeylError::NotRootPermuting));
    }

    #[test]
    fn dominant_representative_basics() {
        let t = tables();
        let rho = Weight::new(t.rho.clone(), Frame::Ambient);
        let (dom, w) = dominant_representative(&t, &rho, System::G);
        assert_eq!(dom.coords, t.rho);
        assert_eq!(w.word.as_deref(), Some(&[][..]));

        // A single reflection of rho comes back with a length-one element.
        let s0 = element_from_word(&t, &[0], System::G);
        let moved = Weight::new(s0.apply(&t.rho), Frame::Ambient);
        let (dom, w) = dominant_representative(&t, &moved, System::G);
        assert_eq!(dom.coords, t.rho);
        assert_eq!(w.word.as_deref(), Some(&[0u8][..]));

        // -rho is carried to rho by the longest element, of length 63.
        let neg: Vec<Rat> = t.rho.iter().map(|c| -c).collect();
        let (dom, w) = dominant_representative(&t, &Weight::new(neg, Frame::Ambient), System::G);
        assert_eq!(dom.coords, t.rho);
        let len = w.word.as_ref().unwrap().len();
        assert_eq!(len, 63);
        assert_eq!(weyl_length(&t, &w).unwrap(), 63);
    }
}
