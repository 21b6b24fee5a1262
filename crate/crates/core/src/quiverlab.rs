//! Explicit representations of the doubled type A quiver over the rationals.
//!
//! Every edge joins a vertex `i` to `i − 1`. The arrow `x_i : V_i → V_{i−1}`
//! belongs to the fixed orientation and `y_i : V_{i−1} → V_i` to the opposite
//! one. The moment map at vertex `i` is `ψ_i = x_{i+1} y_{i+1} − y_i x_i`.
//!
//! The infinite quiver is realized on a finite window of vertices containing
//! every segment with one spare vertex on each side.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::linalg::{q, Matrix, Q};
use crate::multisegments::SegmentMultiset;
use crate::partitions::DimVector;
use crate::QuiverType;
use num_traits::Zero;

/// One edge `src → dst` of the fixed orientation, with both of its maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    /// Vertex index of `i`.
    pub src: usize,
    /// Vertex index of `i − 1`.
    pub dst: usize,
    /// `x : V_src → V_dst`.
    pub x: Matrix,
    /// `y : V_dst → V_src`.
    pub y: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    kind: QuiverType,
    vertices: Vec<i64>,
    dims: Vec<usize>,
    edges: Vec<Edge>,
}

/// Whether the reversed maps must also be nilpotent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Nilpotent representations with vanishing moment map.
    Nilpotent,
    /// Only the fixed-orientation part is required to be nilpotent.
    Gl,
}

impl QuiverRep {
    /// The zero representation with the given vertex labels and dimensions.
    pub fn zero(kind: QuiverType, vertices: Vec<i64>, dims: Vec<usize>) -> Self {
        assert_eq!(vertices.len(), dims.len());
        let edges = match kind {
            QuiverType::Cyclic(n) => (0..n.modulus() as usize)
                .map(|i| {
                    let dst = (i + n.modulus() as usize - 1) % n.modulus() as usize;
                    (i, dst)
                })
                .collect(),
            QuiverType::Infinite => (1..vertices.len()).map(|i| (i, i - 1)).collect::<Vec<_>>(),
        };
        let edges = edges
            .into_iter()
            .map(|(src, dst)| Edge {
                src,
                dst,
                x: Matrix::zeros(dims[dst], dims[src]),
                y: Matrix::zeros(dims[src], dims[dst]),
            })
            .collect();
        QuiverRep {
            kind,
            vertices,
            dims,
            edges,
        }
    }

    pub fn kind(&self) -> QuiverType {
        self.kind
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edges_mut(&mut self) -> &mut [Edge] {
        &mut self.edges
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Index of the vertex labelled `r` (reduced mod `n+1` when cyclic).
    pub fn vertex_index(&self, r: i64) -> Option<usize> {
        let label = self.kind.vertex(r);
        self.vertices.iter().position(|&v| v == label)
    }

    /// Index of the edge whose fixed arrow leaves vertex index `src`.
    pub fn edge_from(&self, src: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.src == src)
    }

    /// `dim E_V` for one orientation.
    pub fn orientation_dim(&self) -> usize {
        self.edges.iter().map(|e| self.dims[e.src] * self.dims[e.dst]).sum()
    }

    /// The same representation with the reversed maps set to zero.
    pub fn omega_part(&self) -> QuiverRep {
        let mut r = self.clone();
        for e in &mut r.edges {
            e.y = Matrix::zeros(e.y.rows(), e.y.cols());
        }
        r
    }

    pub fn reversed_is_zero(&self) -> bool {
        self.edges.iter().all(|e| e.y.is_zero())
    }
}

impl Serialize for QuiverRep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            mode: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            n: Option<u32>,
            vertices: &'a [i64],
            dims: &'a [usize],
            edges: &'a [Edge],
        }
        let (mode, n) = match self.kind {
            QuiverType::Infinite => ("inf", None),
            QuiverType::Cyclic(r) => ("cyclic", Some(r.n())),
        };
        Record {
            mode,
            n,
            vertices: &self.vertices,
            dims: &self.dims,
            edges: &self.edges,
        }
        .serialize(s)
    }
}

/// Per-vertex values `ψ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentValue {
    pub vertices: Vec<i64>,
    pub psi: Vec<Matrix>,
}

impl MomentValue {
    pub fn is_zero(&self) -> bool {
        self.psi.iter().all(Matrix::is_zero)
    }
}

/// The string representation of `f`: each segment `(lo, hi)` contributes basis
/// vectors `e_lo, …, e_hi` with `x : e_r ↦ e_{r−1}` and `e_lo ↦ 0`. The
/// reversed maps are zero.
pub fn build_rep(f: &SegmentMultiset) -> QuiverRep {
    let kind = f.kind();
    let vertices: Vec<i64> = match kind {
        QuiverType::Cyclic(n) => (0..n.modulus()).collect(),
        QuiverType::Infinite => {
            let lo = f.iter().map(|(s, _)| s.lo).min().unwrap_or(0);
            let hi = f.iter().map(|(s, _)| s.hi).max().unwrap_or(0);
            (lo - 1..=hi + 1).collect()
        }
    };
    let mut dims = vec![0usize; vertices.len()];
    // (vertex index, basis position) of every string vector, per string.
    let mut strings: Vec<Vec<(usize, usize)>> = Vec::new();
    let index = |r: i64| -> usize {
        let label = kind.vertex(r);
        vertices.iter().position(|&v| v == label).expect("vertex in window")
    };
    for (s, c) in f.iter() {
        for _ in 0..c {
            let string = (s.lo..=s.hi)
                .map(|r| {
                    let v = index(r);
                    dims[v] += 1;
                    (v, dims[v] - 1)
                })
                .collect();
            strings.push(string);
        }
    }
    let mut rep = QuiverRep::zero(kind, vertices, dims);
    for string in strings {
        for w in string.windows(2) {
            let ((dst, row), (src, col)) = (w[0], w[1]);
            let e = rep.edge_from(src).expect("edge into the string");
            debug_assert_eq!(rep.edges[e].dst, dst);
            rep.edges[e].x[(row, col)] = q(1);
        }
    }
    rep
}

/// `ψ_i = Σ_{dst(e)=i} x_e y_e − Σ_{src(e)=i} y_e x_e`.
pub fn moment_map(rep: &QuiverRep) -> MomentValue {
    let psi = (0..rep.vertices.len())
        .map(|v| {
            let d = rep.dims[v];
            let mut m = Matrix::zeros(d, d);
            for e in &rep.edges {
                if e.dst == v {
                    m = m.add(&e.x.mul(&e.y));
                }
                if e.src == v {
                    m = m.sub(&e.y.mul(&e.x));
                }
            }
            m
        })
        .collect();
    MomentValue {
        vertices: rep.vertices.clone(),
        psi,
    }
}

/// Whether every composable product of `depth` maps vanishes.
///
/// Tracks the span of images of all length-`k` paths at each vertex and
/// checks that it is zero after `depth` steps. With `include_reversed` false
/// only the fixed-orientation maps are used.
pub fn is_nilpotent_with(rep: &QuiverRep, depth: usize, include_reversed: bool) -> bool {
    let mut spans: Vec<Vec<Vec<Q>>> = rep.dims.iter().map(|&d| Matrix::identity(d).column_basis()).collect();
    for _ in 0..depth {
        if spans.iter().all(Vec::is_empty) {
            return true;
        }
        let mut images: Vec<Vec<Vec<Q>>> = vec![Vec::new(); rep.dims.len()];
        for e in &rep.edges {
            for v in &spans[e.src] {
                images[e.dst].push(e.x.apply(v));
            }
            if include_reversed {
                for v in &spans[e.dst] {
                    images[e.src].push(e.y.apply(v));
                }
            }
        }
        spans = images
            .iter()
            .enumerate()
            .map(|(i, cols)| {
                if cols.is_empty() {
                    Vec::new()
                } else {
                    Matrix::from_columns(rep.dims[i], cols).column_basis()
                }
            })
            .collect();
    }
    spans.iter().all(Vec::is_empty)
}

/// Nilpotency of the full doubled representation.
pub fn is_nilpotent(rep: &QuiverRep, depth: usize) -> bool {
    is_nilpotent_with(rep, depth, true)
}

/// Membership in the Lagrangian: vanishing moment map plus nilpotency of the
/// whole representation, or of the fixed orientation only for [`Variant::Gl`].
pub fn in_lagrangian(rep: &QuiverRep, variant: Variant) -> bool {
    let depth = rep.total_dim() + 1;
    moment_map(rep).is_zero()
        && match variant {
            Variant::Nilpotent => is_nilpotent(rep, depth),
            Variant::Gl => is_nilpotent_with(rep, depth, false),
        }
}

/// The conormal directions to the orbit of a fixed-orientation point.
#[derive(Clone, Debug)]
pub struct ConormalFiber {
    /// Basis vectors in the flattened coordinates of the reversed maps.
    pub basis: Vec<Vec<Q>>,
    /// `dim E_V` of the reversed orientation.
    pub ambient_dim: usize,
    /// Rank of the tangent vectors `[a, x']` spanning the orbit tangent space.
    pub orbit_dim: usize,
}

/// Flattened coordinates of the reversed maps, edge by edge, row-major.
fn y_offsets(rep: &QuiverRep) -> Vec<usize> {
    let mut offs = Vec::with_capacity(rep.edges.len() + 1);
    let mut acc = 0;
    for e in &rep.edges {
        offs.push(acc);
        acc += e.y.rows() * e.y.cols();
    }
    offs.push(acc);
    offs
}

/// Tangent vector `[a, x']` for `a = E_pq` at vertex `v`, in the flattened
/// coordinates of the fixed maps (which have the same shapes as the `y`
/// transposes; the pairing is `Σ_e tr(y_e z_e)`).
fn tangent(rep: &QuiverRep, v: usize, p: usize, qq: usize) -> Vec<Vec<Q>> {
    // [a, x]_e = a_dst x_e − x_e a_src, as a dim(dst) × dim(src) matrix.
    rep.edges
        .iter()
        .map(|e| {
            let (r, c) = (e.x.rows(), e.x.cols());
            let mut z = vec![Q::zero(); r * c];
            if e.dst == v {
                // a_dst x: row p receives row qq of x.
                for j in 0..c {
                    z[p * c + j] += e.x[(qq, j)].clone();
                }
            }
            if e.src == v {
                // x a_src: column qq receives column p of x.
                for i in 0..r {
                    z[i * c + qq] -= e.x[(i, p)].clone();
                }
            }
            z
        })
        .collect()
}

/// The null space of `y ↦ Σ_e tr(y_e [a, x']_e)` over a basis of `gl_V`.
pub fn conormal_fiber(rep: &QuiverRep) -> ConormalFiber {
    let offs = y_offsets(rep);
    let ambient = *offs.last().unwrap_or(&0);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut tangents: Vec<Vec<Q>> = Vec::new();
    for v in 0..rep.dims.len() {
        for p in 0..rep.dims[v] {
            for qq in 0..rep.dims[v] {
                let z = tangent(rep, v, p, qq);
                // tr(y z) = Σ_{i,j} y[i][j] z[j][i]; y is dim(src) × dim(dst).
                let mut row = vec![Q::zero(); ambient];
                let mut flat = Vec::with_capacity(ambient);
                for (k, (e, ze)) in rep.edges.iter().zip(&z).enumerate() {
                    let (yr, yc) = (e.y.rows(), e.y.cols());
                    let zc = e.x.cols();
                    for i in 0..yr {
                        for j in 0..yc {
                            row[offs[k] + i * yc + j] = ze[j * zc + i].clone();
                        }
                    }
                    flat.extend(ze.iter().cloned());
                }
                rows.push(row);
                tangents.push(flat);
            }
        }
    }
    let basis = if rows.is_empty() {
        Matrix::identity(ambient).column_basis()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    let orbit_dim = if tangents.is_empty() || tangents[0].is_empty() {
        0
    } else {
        Matrix::from_rows(tangents).rank()
    };
    ConormalFiber {
        basis,
        ambient_dim: ambient,
        orbit_dim,
    }
}

/// `x' + x''` with `x''` a random rational point of the conormal fiber.
pub fn conormal_sample(x_omega: &QuiverRep, seed: u64) -> QuiverRep {
    let base = x_omega.omega_part();
    let fiber = conormal_fiber(&base);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut flat = vec![Q::zero(); fiber.ambient_dim];
    for b in &fiber.basis {
        let c = Q::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into());
        for (slot, v) in flat.iter_mut().zip(b) {
            if !v.is_zero() {
                *slot += &c * v;
            }
        }
    }
    let offs = y_offsets(&base);
    let mut rep = base;
    for (k, e) in rep.edges.iter_mut().enumerate() {
        let cols = e.y.cols();
        for i in 0..e.y.rows() {
            for j in 0..cols {
                e.y[(i, j)] = flat[offs[k] + i * cols + j].clone();
            }
        }
    }
    rep
}

/// `dim(∩ kernels of all maps leaving V_i) ≤ w_i` at every vertex.
pub fn stability_test(rep: &QuiverRep, w: &DimVector) -> bool {
    (0..rep.vertices.len()).all(|v| {
        let d = rep.dims[v];
        if d == 0 {
            return true;
        }
        let mut stacked = Matrix::zeros(0, d);
        for e in &rep.edges {
            if e.src == v {
                stacked = stacked.vstack(&e.x);
            }
            if e.dst == v {
                stacked = stacked.vstack(&e.y);
            }
        }
        let kernel = d - stacked.rank();
        kernel as u64 <= w.get(rep.vertices[v])
    })
}

/// Framing `w` with one unit at the vertex of each charge.
pub fn framing(kind: QuiverType, charges: &[i64]) -> DimVector {
    let mut w = DimVector::zero(kind);
    for &g in charges {
        w.add(g, 1);
    }
    w
}
