//! Generators for test complexes: the elementary indecomposable shapes of
//! bounded double complexes (dots, squares, zigzags), direct sums, and
//! basis scrambling.
//!
//! Every bounded double complex decomposes into these shapes up to
//! isomorphism, so random direct sums of them, conjugated by random
//! invertible slice maps, exercise the full range of behavior: squares and
//! dots are cohomologically inert or one-dimensional, while zigzags are
//! exactly the summands that break the d'd''-lemma.

use std::collections::BTreeMap;

use exact_linalg::{GaussianRational, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Bidegree, DoubleComplex};

/// Which differential leaves the first generator of a zigzag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZigzagOrientation {
    DprimeFirst,
    DsecondFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementaryShape {
    /// One generator, no differentials.
    Dot { p: i64, q: i64 },
    /// Generators x, d'x, d''x, d'd''x; the d'' matrix out of (p+1,q) is -1
    /// so the two composites cancel.
    Square { p: i64, q: i64 },
    /// A staircase of `length` arrows joining `length + 1` generators, with
    /// arrow types alternating and sources/sinks alternating. `length` 1 is a
    /// single-arrow domino.
    Zigzag {
        p: i64,
        q: i64,
        length: usize,
        orientation: ZigzagOrientation,
    },
}

/// Builds one elementary complex. Panics on a zero-length zigzag.
pub fn generate_elementary(shape: ElementaryShape) -> DoubleComplex {
    let mut support: BTreeMap<Bidegree, usize> = BTreeMap::new();
    let mut dprime: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    let mut dsecond: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    let one = || Matrix::identity(1);
    match shape {
        ElementaryShape::Dot { p, q } => {
            support.insert((p, q), 1);
        }
        ElementaryShape::Square { p, q } => {
            for pq in [(p, q), (p + 1, q), (p, q + 1), (p + 1, q + 1)] {
                support.insert(pq, 1);
            }
            dprime.insert((p, q), one());
            dprime.insert((p, q + 1), one());
            dsecond.insert((p, q), one());
            dsecond.insert((p + 1, q), -&one());
        }
        ElementaryShape::Zigzag {
            p,
            q,
            length,
            orientation,
        } => {
            assert!(length >= 1, "zigzag length must be at least 1");
            // Generator 2j sits on the source antidiagonal, generator 2j+1 on
            // the sink antidiagonal one total degree up; odd arrows leave
            // even generators, even arrows enter odd generators from the
            // next even one.
            let position = |index: usize| -> Bidegree {
                let j = (index / 2) as i64;
                match (orientation, index % 2) {
                    (ZigzagOrientation::DprimeFirst, 0) => (p + j, q - j),
                    (ZigzagOrientation::DprimeFirst, _) => (p + j + 1, q - j),
                    (ZigzagOrientation::DsecondFirst, 0) => (p - j, q + j),
                    (ZigzagOrientation::DsecondFirst, _) => (p - j, q + j + 1),
                }
            };
            for index in 0..=length {
                support.insert(position(index), 1);
            }
            for index in (0..=length).step_by(2) {
                let (first, second) = match orientation {
                    ZigzagOrientation::DprimeFirst => (&mut dprime, &mut dsecond),
                    ZigzagOrientation::DsecondFirst => (&mut dsecond, &mut dprime),
                };
                if index + 1 <= length {
                    first.insert(position(index), one());
                }
                if index >= 2 {
                    second.insert(position(index), one());
                }
            }
        }
    }
    DoubleComplex::new(support, dprime, dsecond)
}

/// Block direct sum; summand slices are stacked in argument order.
pub fn direct_sum(summands: &[DoubleComplex]) -> DoubleComplex {
    let mut support: BTreeMap<Bidegree, usize> = BTreeMap::new();
    for c in summands {
        for (&pq, &dim) in c.support() {
            *support.entry(pq).or_insert(0) += dim;
        }
    }
    // Offset of each summand inside each combined slice.
    let mut offsets: Vec<BTreeMap<Bidegree, usize>> = Vec::with_capacity(summands.len());
    let mut running: BTreeMap<Bidegree, usize> = BTreeMap::new();
    for c in summands {
        let mut mine = BTreeMap::new();
        for (&pq, &dim) in c.support() {
            let entry = running.entry(pq).or_insert(0);
            mine.insert(pq, *entry);
            *entry += dim;
        }
        offsets.push(mine);
    }
    let assemble = |pick: fn(&DoubleComplex, i64, i64) -> Matrix, shift: fn(Bidegree) -> Bidegree| {
        let mut table: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
        for (&pq, &dim) in &support {
            let (p, q) = pq;
            let tgt = shift(pq);
            let tgt_dim = support.get(&tgt).copied().unwrap_or(0);
            if tgt_dim == 0 {
                continue;
            }
            let mut block = Matrix::zeros(tgt_dim, dim);
            let mut nonzero = false;
            for (i, c) in summands.iter().enumerate() {
                let piece = pick(c, p, q);
                if piece.rows() == 0 || piece.cols() == 0 {
                    continue;
                }
                let src_off = offsets[i].get(&pq).copied().unwrap_or(0);
                let tgt_off = offsets[i].get(&tgt).copied().unwrap_or(0);
                for r in 0..piece.rows() {
                    for col in 0..piece.cols() {
                        let v = piece.get(r, col);
                        if !v.is_zero() {
                            nonzero = true;
                        }
                        block.set(tgt_off + r, src_off + col, v.clone());
                    }
                }
            }
            if nonzero {
                table.insert(pq, block);
            }
        }
        table
    };
    let dprime = assemble(|c, p, q| c.dprime_at(p, q), |(p, q)| (p + 1, q));
    let dsecond = assemble(|c, p, q| c.dsecond_at(p, q), |(p, q)| (p, q + 1));
    DoubleComplex::new(support, dprime, dsecond)
}

fn random_entry(rng: &mut impl Rng) -> GaussianRational {
    match rng.random_range(0..8u32) {
        0..=2 => GaussianRational::zero(),
        3 => GaussianRational::one(),
        4 => -&GaussianRational::one(),
        5 => GaussianRational::i(),
        6 => -&GaussianRational::i(),
        _ => GaussianRational::from_int(2),
    }
}

fn random_unit(rng: &mut impl Rng) -> GaussianRational {
    match rng.random_range(0..6u32) {
        0 => GaussianRational::one(),
        1 => -&GaussianRational::one(),
        2 => GaussianRational::i(),
        3 => -&GaussianRational::i(),
        4 => GaussianRational::from_int(2),
        _ => GaussianRational::ratio(1, 2),
    }
}

/// A random invertible matrix, built as unit-lower times diagonal-unit times
/// unit-upper so no invertibility retry is ever needed.
fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    let mut diag = Matrix::zeros(n, n);
    for r in 0..n {
        diag.set(r, r, random_unit(rng));
        for c in 0..r {
            lower.set(r, c, random_entry(rng));
            upper.set(c, r, random_entry(rng));
        }
    }
    &(&lower * &diag) * &upper
}

/// Conjugates every slice by a seeded random invertible matrix and rewrites
/// the differentials accordingly. All cohomology dimensions are unchanged.
pub fn scramble_basis(c: &DoubleComplex, seed: u64) -> DoubleComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut change: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    let mut change_inv: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
    for (&pq, &dim) in c.support() {
        let s = random_invertible(&mut rng, dim);
        let s_inv = s.inverse().expect("triangular product is invertible");
        change.insert(pq, s);
        change_inv.insert(pq, s_inv);
    }
    let transform = |pick: fn(&DoubleComplex, i64, i64) -> Matrix, shift: fn(Bidegree) -> Bidegree| {
        let mut table: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
        for &pq in c.support().keys() {
            let tgt = shift(pq);
            let m = pick(c, pq.0, pq.1);
            if m.rows() == 0 || m.cols() == 0 || m.is_zero() {
                continue;
            }
            let transformed = &(&change[&tgt] * &m) * &change_inv[&pq];
            table.insert(pq, transformed);
        }
        table
    };
    let dprime = transform(|c, p, q| c.dprime_at(p, q), |(p, q)| (p + 1, q));
    let dsecond = transform(|c, p, q| c.dsecond_at(p, q), |(p, q)| (p, q + 1));
    DoubleComplex::new(c.support().clone(), dprime, dsecond)
}

/// What shapes a random complex may contain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    /// Any mix of dots, squares, and zigzags.
    Mixed,
    /// Dots and squares only (the d'd''-lemma holds for these).
    ZigzagFree,
    /// At least one zigzag summand (the d'd''-lemma fails for these).
    WithZigzag,
}

fn random_shape(rng: &mut impl Rng, allow_zigzag: bool, force_zigzag: bool) -> ElementaryShape {
    let p = rng.random_range(-2..=2);
    let q = rng.random_range(-2..=2);
    let choice = if force_zigzag {
        2
    } else if allow_zigzag {
        rng.random_range(0..3u32)
    } else {
        rng.random_range(0..2u32)
    };
    match choice {
        0 => ElementaryShape::Dot { p, q },
        1 => ElementaryShape::Square { p, q },
        _ => ElementaryShape::Zigzag {
            p,
            q,
            length: rng.random_range(1..=4),
            orientation: if rng.random_bool(0.5) {
                ZigzagOrientation::DprimeFirst
            } else {
                ZigzagOrientation::DsecondFirst
            },
        },
    }
}

/// A seeded random direct sum of elementary shapes with scrambled bases.
pub fn random_complex(rng: &mut impl Rng, kind: CorpusKind) -> DoubleComplex {
    let pieces = rng.random_range(1..=4usize);
    let mut summands = Vec::with_capacity(pieces);
    for i in 0..pieces {
        let force = kind == CorpusKind::WithZigzag && i == 0;
        let allow = kind != CorpusKind::ZigzagFree;
        summands.push(generate_elementary(random_shape(rng, allow, force)));
    }
    let sum = direct_sum(&summands);
    scramble_basis(&sum, rng.random())
}
