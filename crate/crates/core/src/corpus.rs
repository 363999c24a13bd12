//! Test algebras: matrix algebras, triangular algebras, group algebras,
//! truncated polynomial rings, direct sums, and seeded random subalgebras
//! of matrix algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element, Side, SidedIdeal};
use crate::arith::{FieldSpec, Matrix, Scalar, Subspace};
use crate::error::{Error, Result};

/// Largest dimension a random matrix subalgebra may reach.
pub const MAX_RANDOM_DIM: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CorpusKind {
    MatrixAlgebra(usize),
    Triangular(usize),
    /// Multiplication table of a finite group on `0..n`.
    GroupAlgebra(Vec<Vec<usize>>),
    /// `k[t]/(t^n)`.
    TruncatedPolynomial(usize),
    ZeroAlgebra(usize),
    DirectSum(Vec<CorpusKind>),
    RandomMatrixSubalgebra {
        n: usize,
        generators: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub field: FieldSpec,
    pub kind: CorpusKind,
}

/// A built algebra, with the matrices realising its basis when it came
/// from a matrix construction.
#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub algebra: Algebra,
    pub embedding: Option<Vec<Matrix>>,
}

impl CorpusKind {
    /// Same kind with every random seed offset by `offset`.
    pub fn reseeded(&self, offset: u64) -> CorpusKind {
        match self {
            CorpusKind::RandomMatrixSubalgebra { n, generators, seed } => {
                CorpusKind::RandomMatrixSubalgebra {
                    n: *n,
                    generators: *generators,
                    seed: seed.wrapping_add(offset),
                }
            }
            CorpusKind::DirectSum(parts) => {
                CorpusKind::DirectSum(parts.iter().map(|p| p.reseeded(offset)).collect())
            }
            other => other.clone(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CorpusKind::MatrixAlgebra(n) => format!("M{n}"),
            CorpusKind::Triangular(n) => format!("T{n}"),
            CorpusKind::GroupAlgebra(t) => format!("kG(|G|={})", t.len()),
            CorpusKind::TruncatedPolynomial(n) => format!("k[t]/t^{n}"),
            CorpusKind::ZeroAlgebra(n) => format!("zero{n}"),
            CorpusKind::DirectSum(parts) => {
                let names: Vec<String> = parts.iter().map(CorpusKind::describe).collect();
                names.join("+")
            }
            CorpusKind::RandomMatrixSubalgebra { n, generators, seed } => {
                format!("rand(n={n},g={generators},seed={seed})")
            }
        }
    }
}

pub fn build(spec: &CorpusSpec) -> Result<CorpusInstance> {
    let field = spec.field;
    Ok(match &spec.kind {
        CorpusKind::MatrixAlgebra(n) => {
            let basis = (0..n * n)
                .map(|i| unit_matrix(field, *n, i / n, i % n))
                .collect();
            CorpusInstance {
                algebra: matrix_algebra(field, *n),
                embedding: Some(basis),
            }
        }
        CorpusKind::Triangular(n) => {
            let mut basis = Vec::new();
            for a in 0..*n {
                for b in a..*n {
                    basis.push(unit_matrix(field, *n, a, b));
                }
            }
            CorpusInstance {
                algebra: triangular(field, *n),
                embedding: Some(basis),
            }
        }
        CorpusKind::GroupAlgebra(table) => plain(group_algebra(field, table)?),
        CorpusKind::TruncatedPolynomial(n) => plain(truncated_polynomial(field, *n)),
        CorpusKind::ZeroAlgebra(n) => plain(Algebra::zero_product(field, *n)),
        CorpusKind::DirectSum(parts) => {
            let algebras = parts
                .iter()
                .map(|kind| {
                    build(&CorpusSpec {
                        field,
                        kind: kind.clone(),
                    })
                    .map(|i| i.algebra)
                })
                .collect::<Result<Vec<_>>>()?;
            plain(direct_sum(field, &algebras)?)
        }
        CorpusKind::RandomMatrixSubalgebra { n, generators, seed } => {
            let (algebra, basis) = random_matrix_subalgebra(field, *n, *generators, *seed)?;
            CorpusInstance {
                algebra,
                embedding: Some(basis),
            }
        }
    })
}

fn plain(algebra: Algebra) -> CorpusInstance {
    CorpusInstance {
        algebra,
        embedding: None,
    }
}

fn unit_matrix(field: FieldSpec, n: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m[(a, b)] = field.one();
    m
}

/// `M_n` in the matrix units `E_ab`, index `a n + b`.
pub fn matrix_algebra(field: FieldSpec, n: usize) -> Algebra {
    let d = n * n;
    let mut tensor = vec![field.zero(); d * d * d];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // E_ab E_bc = E_ac
                let (i, j, k) = (a * n + b, b * n + c, a * n + c);
                tensor[(i * d + j) * d + k] = field.one();
            }
        }
    }
    Algebra::new(field, d, tensor).expect("matrix algebras are associative")
}

/// Upper triangular `n × n` matrices in the units `E_ab`, `a ≤ b`, ordered
/// row by row.
pub fn triangular(field: FieldSpec, n: usize) -> Algebra {
    let units: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| units.iter().position(|&u| u == (a, b)).expect("a <= b");
    let d = units.len();
    let mut tensor = vec![field.zero(); d * d * d];
    for (i, &(a, b)) in units.iter().enumerate() {
        for (j, &(c, e)) in units.iter().enumerate() {
            if b == c {
                tensor[(i * d + j) * d + index(a, e)] = field.one();
            }
        }
    }
    Algebra::new(field, d, tensor).expect("triangular algebras are associative")
}

/// `k[t]/(t^n)` in the basis `1, t, …, t^(n-1)`.
pub fn truncated_polynomial(field: FieldSpec, n: usize) -> Algebra {
    let mut tensor = vec![field.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                tensor[(i * n + j) * n + i + j] = field.one();
            }
        }
    }
    Algebra::new(field, n, tensor).expect("polynomial rings are associative")
}

/// Cyclic group table `i * j = i + j mod n`.
pub fn cyclic_group(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// The group algebra of the group with multiplication table `table`.
pub fn group_algebra(field: FieldSpec, table: &[Vec<usize>]) -> Result<Algebra> {
    let n = table.len();
    let invalid = |msg: String| Error::InvalidCayleyTable(msg);
    if n == 0 {
        return Err(invalid("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(invalid(format!("row {i} has length {}, expected {n}", row.len())));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(invalid(format!("entry {x} in row {i} is out of range")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(invalid(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| invalid("no identity element".into()))?;
    for (a, row) in table.iter().enumerate() {
        if !(0..n).any(|b| row[b] == identity && table[b][a] == identity) {
            return Err(invalid(format!("element {a} has no inverse")));
        }
    }
    let mut tensor = vec![field.zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            tensor[(a * n + b) * n + table[a][b]] = field.one();
        }
    }
    Algebra::new(field, n, tensor)
}

/// Block-diagonal structure constants; the basis of each summand follows
/// the previous one.
pub fn direct_sum(field: FieldSpec, parts: &[Algebra]) -> Result<Algebra> {
    if parts.iter().any(|p| p.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let d: usize = parts.iter().map(Algebra::dim).sum();
    let mut tensor = vec![field.zero(); d * d * d];
    let mut offset = 0;
    for p in parts {
        let m = p.dim();
        for i in 0..m {
            for j in 0..m {
                for (k, c) in p.basis_product(i, j).iter().enumerate() {
                    tensor[((offset + i) * d + offset + j) * d + offset + k] = c.clone();
                }
            }
        }
        offset += m;
    }
    Algebra::new(field, d, tensor)
}

/// Block sizes whose block-upper-triangular algebra has dimension at most
/// [`MAX_RANDOM_DIM`].
fn block_patterns(n: usize) -> Vec<Vec<usize>> {
    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    compositions(n)
        .into_iter()
        .filter(|blocks| {
            let mut dim = 0;
            for i in 0..blocks.len() {
                for j in i..blocks.len() {
                    dim += blocks[i] * blocks[j];
                }
            }
            dim <= MAX_RANDOM_DIM
        })
        .collect()
}

fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    let v: i64 = rng.gen_range(1..=2);
    if rng.gen_bool(0.5) {
        field.from_i64(v)
    } else {
        field.from_i64(-v)
    }
}

/// The subalgebra of `M_n` generated by `generators` random sparse
/// matrices sharing a random block-upper-triangular support. Returns the
/// algebra in the canonical basis of its span, and that basis as matrices.
pub fn random_matrix_subalgebra(
    field: FieldSpec,
    n: usize,
    generators: usize,
    seed: u64,
) -> Result<(Algebra, Vec<Matrix>)> {
    if n == 0 || n > 4 {
        return Err(Error::TooLarge(format!("random matrix subalgebras need 1 <= n <= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let patterns = block_patterns(n);
    let blocks = &patterns[rng.gen_range(0..patterns.len())];
    let mut block_of = Vec::with_capacity(n);
    for (b, &size) in blocks.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(b, size));
    }

    let nn = n * n;
    let mut gens = Vec::with_capacity(generators);
    for _ in 0..generators {
        // each generator keeps a random subset of the allowed blocks
        let nb = blocks.len();
        let keep: Vec<Vec<bool>> = (0..nb)
            .map(|i| (0..nb).map(|j| i <= j && rng.gen_bool(0.7)).collect())
            .collect();
        let mut v = vec![field.zero(); nn];
        for a in 0..n {
            for b in 0..n {
                if keep[block_of[a]][block_of[b]] && rng.gen_bool(0.5) {
                    v[a * n + b] = random_scalar(field, &mut rng);
                }
            }
        }
        if v.iter().all(Scalar::is_zero) {
            let allowed: Vec<usize> = (0..nn)
                .filter(|&i| block_of[i / n] <= block_of[i % n])
                .collect();
            v[allowed[rng.gen_range(0..allowed.len())]] = random_scalar(field, &mut rng);
        }
        gens.push(v);
    }

    let mat = |v: &[Scalar]| Matrix::from_rows(field, n, v.chunks(n).map(<[Scalar]>::to_vec).collect());
    let flat = |m: &Matrix| m.row_vectors().flat_map(|r| r.iter().cloned()).collect::<Vec<_>>();
    let mut space = Subspace::span(field, nn, gens);
    loop {
        let basis: Vec<Matrix> = space.basis_vectors().map(mat).collect();
        let mut products = Vec::new();
        for x in &basis {
            for y in &basis {
                let p = flat(&x.mul(y));
                if !space.contains(&p) {
                    products.push(p);
                }
            }
        }
        if products.is_empty() {
            break;
        }
        space = space.sum(&Subspace::span(field, nn, products))?;
    }

    let basis: Vec<Matrix> = space.basis_vectors().map(mat).collect();
    let d = basis.len();
    let mut tensor = Vec::with_capacity(d * d * d);
    for x in &basis {
        for y in &basis {
            tensor.extend(space.coordinates(&flat(&x.mul(y))).expect("closed under products"));
        }
    }
    Ok((Algebra::new(field, d, tensor)?, basis))
}

/// A random element with small sparse coordinates.
pub fn random_element(algebra: &Algebra, rng: &mut ChaCha8Rng) -> Element {
    let field = algebra.field();
    let n = algebra.dim();
    let density = if n <= 3 { 0.6 } else { 0.35 };
    Element::new(
        (0..n)
            .map(|_| {
                if rng.gen_bool(density) {
                    random_scalar(field, rng)
                } else {
                    field.zero()
                }
            })
            .collect(),
    )
}

/// The ideal of the given side generated by 1 to 3 random elements.
pub fn random_ideal(algebra: &Algebra, side: Side, seed: u64) -> SidedIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=3);
    let gens: Vec<Element> = (0..count).map(|_| random_element(algebra, &mut rng)).collect();
    algebra.ideal_generated(side, &gens)
}

pub fn random_left_ideal(algebra: &Algebra, seed: u64) -> SidedIdeal {
    random_ideal(algebra, Side::Left, seed)
}

/// Fixed small algebras plus random ones, all of dimension at most
/// `max_dim`, for exhaustive suites over tiny fields.
pub fn tiny_algebras(field: FieldSpec, max_dim: usize, random: usize, seed: u64) -> Vec<(String, Algebra)> {
    let mut out: Vec<(String, Algebra)> = Vec::new();
    let mut push = |name: String, a: Algebra| {
        if a.dim() <= max_dim {
            out.push((format!("{name}/{field}"), a));
        }
    };
    for n in 1..=3 {
        push(format!("zero{n}"), Algebra::zero_product(field, n));
    }
    for n in 1..=4 {
        push(format!("k[t]/t^{n}"), truncated_polynomial(field, n));
    }
    push("T2".into(), triangular(field, 2));
    push("M2".into(), matrix_algebra(field, 2));
    for g in 2..=4 {
        if let Ok(a) = group_algebra(field, &cyclic_group(g)) {
            push(format!("kC{g}"), a);
        }
    }
    let k = truncated_polynomial(field, 1);
    let dual = truncated_polynomial(field, 2);
    let zero1 = Algebra::zero_product(field, 1);
    if let Ok(a) = direct_sum(field, &[k.clone(), k.clone()]) {
        push("k+k".into(), a);
    }
    if let Ok(a) = direct_sum(field, &[k.clone(), zero1.clone()]) {
        push("k+zero1".into(), a);
    }
    if let Ok(a) = direct_sum(field, &[dual.clone(), k.clone()]) {
        push("k[t]/t^2+k".into(), a);
    }
    if let Ok(a) = direct_sum(field, &[triangular(field, 2), zero1]) {
        push("T2+zero1".into(), a);
    }
    let mut s = seed;
    let mut made = 0;
    while made < random && s < seed + 50 * random as u64 + 50 {
        let n = 2 + (s % 2) as usize;
        if let Ok((a, _)) = random_matrix_subalgebra(field, n, 1 + (s % 3) as usize, s) {
            if a.dim() >= 2 && a.dim() <= max_dim {
                push(format!("rand{s}"), a);
                made += 1;
            }
        }
        s += 1;
    }
    out
}
