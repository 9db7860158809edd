//! Builders for the metric Lie algebra families used throughout the crate,
//! plus the fixed catalog of instances that the verification suites run over.
//!
//! Complex structures are realized over the rationals by doubling: the
//! imaginary unit acts as the 2x2 rotation block. so3 is fixed in the cyclic
//! basis ([e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2), so its Killing form is
//! exactly -2*identity.

use crate::error::LieError;
use crate::forms::{index_and_relative_index, is_invariant, MetricLieAlgebra, SymBilinearForm};
use crate::lie::{direct_product_algebras, semidirect_product, LieAlgebra};
use crate::matrix::Matrix;
use crate::rational::{rat, Rational};
use num::traits::Zero;

/// so3 in the cyclic basis; Killing form -2I.
pub fn so3() -> LieAlgebra {
    let mut table = zero_table(3);
    table[0][1][2] = rat(1);
    table[1][0][2] = rat(-1);
    table[1][2][0] = rat(1);
    table[2][1][0] = rat(-1);
    table[2][0][1] = rat(1);
    table[0][2][1] = rat(-1);
    LieAlgebra::from_dense(vec!["e1".into(), "e2".into(), "e3".into()], table).unwrap()
}

/// sl2 in the standard basis X, Y, H with [X,Y] = H, [H,X] = 2X, [H,Y] = -2Y.
pub fn sl2() -> LieAlgebra {
    let mut table = zero_table(3);
    table[0][1][2] = rat(1);
    table[1][0][2] = rat(-1);
    table[2][0][0] = rat(2);
    table[0][2][0] = rat(-2);
    table[2][1][1] = rat(-2);
    table[1][2][1] = rat(2);
    LieAlgebra::from_dense(vec!["X".into(), "Y".into(), "H".into()], table).unwrap()
}

/// The rotation generators of so3 in the cyclic convention, as 3x3 matrices.
pub fn so3_vector_matrices() -> Vec<Matrix> {
    vec![
        Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
        Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
        Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
    ]
}

/// so_n on the basis B_pq = E_pq - E_qp, pairs (p, q) with p < q in
/// lexicographic order.
pub fn so_n(n: usize) -> LieAlgebra {
    let (alg, _) = so_n_with_matrices(n);
    alg
}

pub fn so_n_with_matrices(n: usize) -> (LieAlgebra, Vec<Matrix>) {
    let mut pairs = Vec::new();
    for p in 0..n {
        for q in (p + 1)..n {
            pairs.push((p, q));
        }
    }
    let d = pairs.len();
    let mats: Vec<Matrix> = pairs
        .iter()
        .map(|&(p, q)| {
            let mut m = Matrix::zero(n, n);
            m.set(p, q, rat(1));
            m.set(q, p, rat(-1));
            m
        })
        .collect();
    let mut table = zero_table(d);
    for a in 0..d {
        for b in 0..d {
            let c = mats[a].commutator(&mats[b]);
            for (k, &(p, q)) in pairs.iter().enumerate() {
                table[a][b][k] = c.get(p, q).clone();
            }
        }
    }
    let labels = pairs
        .iter()
        .map(|&(p, q)| format!("B{}{}", p + 1, q + 1))
        .collect();
    (LieAlgebra::from_dense(labels, table).unwrap(), mats)
}

/// Euclidean algebra so_n ⋉ R^n with the natural action.
pub fn build_euclidean(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 2 {
        return Err(LieError::Precondition(
            "euclidean algebra needs n >= 2".into(),
        ));
    }
    let (rot, mats) = so_n_with_matrices(n);
    semidirect_product(&rot, &LieAlgebra::abelian(n), &mats)
}

fn zero_table(d: usize) -> Vec<Vec<Vec<Rational>>> {
    vec![vec![vec![Rational::zero(); d]; d]; d]
}

fn metric(algebra: LieAlgebra, gram: Matrix) -> MetricLieAlgebra {
    MetricLieAlgebra::new(algebra, SymBilinearForm::new(gram).expect("symmetric gram"))
        .expect("matching dimensions")
}

/// Abelian R^n with the form diag(I_{n-s}, -I_s); requires s <= n - s.
pub fn build_abelian(n: usize, s: usize) -> Result<MetricLieAlgebra, LieError> {
    if 2 * s > n {
        return Err(LieError::Precondition(format!(
            "abelian form signature needs s <= n - s, got n = {n}, s = {s}"
        )));
    }
    let mut gram = Matrix::identity(n);
    for i in (n - s)..n {
        gram.set(i, i, rat(-1));
    }
    Ok(metric(LieAlgebra::abelian(n), gram))
}

/// Heisenberg algebra h_{2n+1} from a Hermitian form on C^n given by signs
/// (+1 or -1 per complex coordinate): brackets from the imaginary part, form
/// from the real part, center orthogonal to everything.
pub fn build_heisenberg(n: usize, signs: &[i64]) -> Result<MetricLieAlgebra, LieError> {
    if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(LieError::Precondition(
            "hermitian signature must list +1/-1 once per complex coordinate".into(),
        ));
    }
    let dim = 2 * n + 1;
    let mut table = zero_table(dim);
    let z = dim - 1;
    for j in 0..n {
        // X_j at j, Y_j at n + j; (X_j, Y_j) = eps_j * i, so Im = eps_j
        table[j][n + j][z] = rat(signs[j]);
        table[n + j][j][z] = rat(-signs[j]);
    }
    let mut labels: Vec<String> = (0..n).map(|j| format!("X{}", j + 1)).collect();
    labels.extend((0..n).map(|j| format!("Y{}", j + 1)));
    labels.push("Z".into());
    let alg = LieAlgebra::from_dense(labels, table)?;
    let mut gram = Matrix::zero(dim, dim);
    for j in 0..n {
        gram.set(j, j, rat(signs[j]));
        gram.set(n + j, n + j, rat(signs[j]));
    }
    Ok(metric(alg, gram))
}

/// Oscillator algebra for psi in so_{n-s,s}: basis D, A_1..A_n, Z with
/// [D, A] = psi A, [A, B] = <psi A, B> Z, and the form extending
/// diag(I_{n-s}, -I_s) by the dual pair <D, Z> = 1.
pub fn build_oscillator(psi: &Matrix, s: usize) -> Result<MetricLieAlgebra, LieError> {
    let n = psi.rows;
    if !psi.is_square() {
        return Err(LieError::DimensionMismatch("psi must be square".into()));
    }
    if 2 * s > n {
        return Err(LieError::Precondition(format!(
            "oscillator signature needs s <= n - s, got n = {n}, s = {s}"
        )));
    }
    let mut g_ab = Matrix::identity(n);
    for i in (n - s)..n {
        g_ab.set(i, i, rat(-1));
    }
    if !crate::forms::skew_defect(&g_ab, psi).is_zero() {
        return Err(LieError::Precondition(
            "psi is not skew for the abelian part's form".into(),
        ));
    }
    let dim = n + 2;
    let mut table = zero_table(dim);
    // D at 0, A_j at 1..=n, Z at n+1
    for j in 0..n {
        for k in 0..n {
            let c = psi.get(k, j).clone();
            if !c.is_zero() {
                table[0][1 + j][1 + k] = c.clone();
                table[1 + j][0][1 + k] = -c;
            }
        }
    }
    let pairing = psi.transpose().mul(&g_ab); // <psi e_i, e_j>
    for i in 0..n {
        for j in 0..n {
            let c = pairing.get(i, j).clone();
            if !c.is_zero() {
                table[1 + i][1 + j][n + 1] = c;
            }
        }
    }
    let mut labels = vec!["D".to_string()];
    labels.extend((0..n).map(|j| format!("A{}", j + 1)));
    labels.push("Z".into());
    let alg = LieAlgebra::from_dense(labels, table)?;
    let mut gram = Matrix::zero(dim, dim);
    for i in 0..n {
        for j in 0..n {
            gram.set(1 + i, 1 + j, g_ab.get(i, j).clone());
        }
    }
    gram.set(0, n + 1, rat(1));
    gram.set(n + 1, 0, rat(1));
    let m = metric(alg, gram);
    assert!(is_invariant(&m), "oscillator forms are invariant");
    Ok(m)
}

/// The standard oscillator: psi acts as multiplication by i on C^n, i.e. n
/// rotation blocks. Basis J, X_1, Y_1, ..., X_n, Y_n, Z; dimension 2n + 2,
/// Lorentzian.
pub fn standard_oscillator(n: usize) -> MetricLieAlgebra {
    let mut psi = Matrix::zero(2 * n, 2 * n);
    for b in 0..n {
        psi.set(2 * b, 2 * b + 1, rat(-1));
        psi.set(2 * b + 1, 2 * b, rat(1));
    }
    let mut m = build_oscillator(&psi, 0).expect("rotation blocks are skew");
    let mut labels = vec!["J".to_string()];
    for b in 0..n {
        labels.push(format!("X{}", b + 1));
        labels.push(format!("Y{}", b + 1));
    }
    labels.push("Z".into());
    m.algebra.labels = labels;
    m
}

/// Two-step nilpotent oscillator: psi^2 = 0 in so_{2,2}; dimension 6.
pub fn nilpotent_oscillator_two_step() -> MetricLieAlgebra {
    let psi = Matrix::from_i64(&[
        &[0, 1, 0, -1],
        &[-1, 0, 1, 0],
        &[0, 1, 0, -1],
        &[-1, 0, 1, 0],
    ]);
    build_oscillator(&psi, 2).expect("psi lies in so_{2,2}")
}

/// Three-step nilpotent oscillator: psi^3 = 0, psi^2 != 0 in so_{2,1};
/// dimension 5, index 2.
pub fn nilpotent_oscillator_three_step() -> MetricLieAlgebra {
    let psi = Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 1], &[0, 1, 0]]);
    build_oscillator(&psi, 1).expect("psi lies in so_{2,1}")
}

/// Double oscillator with two derivations and two central directions.
/// Plain variant: D_1, D_2, X_1..X_n, Y_1..Y_n, Z_1, Z_2 (dim 2n + 4).
/// Variant `one` adds W with [D_1, D_2] = W, [D_1, W] = -Z_2, [D_2, W] = Z_1
/// (dim 2n + 5).
pub fn build_osc_alpha(
    alpha1: &[Rational],
    alpha2: &[Rational],
    one: bool,
) -> Result<MetricLieAlgebra, LieError> {
    if alpha1.len() != alpha2.len() {
        return Err(LieError::Precondition(
            "alpha tuples must have equal length".into(),
        ));
    }
    let n = alpha1.len();
    let dim = 2 * n + 4 + usize::from(one);
    let x = |j: usize| 2 + j;
    let y = |j: usize| 2 + n + j;
    let w = 2 + 2 * n;
    let z1 = dim - 2;
    let z2 = dim - 1;
    let alphas = [alpha1, alpha2];
    let mut table = zero_table(dim);
    for j in 0..n {
        // [X_j, Y_j] = alpha^1_j Z_1 + alpha^2_j Z_2
        table[x(j)][y(j)][z1] = alpha1[j].clone();
        table[y(j)][x(j)][z1] = -alpha1[j].clone();
        table[x(j)][y(j)][z2] = alpha2[j].clone();
        table[y(j)][x(j)][z2] = -alpha2[j].clone();
        for k in 0..2 {
            // [D_k, X_j] = alpha^k_j Y_j, [D_k, Y_j] = -alpha^k_j X_j
            table[k][x(j)][y(j)] = alphas[k][j].clone();
            table[x(j)][k][y(j)] = -alphas[k][j].clone();
            table[k][y(j)][x(j)] = -alphas[k][j].clone();
            table[y(j)][k][x(j)] = alphas[k][j].clone();
        }
    }
    if one {
        table[0][1][w] = rat(1);
        table[1][0][w] = rat(-1);
        table[0][w][z2] = rat(-1);
        table[w][0][z2] = rat(1);
        table[1][w][z1] = rat(1);
        table[w][1][z1] = rat(-1);
    }
    let mut labels = vec!["D1".to_string(), "D2".to_string()];
    labels.extend((0..n).map(|j| format!("X{}", j + 1)));
    labels.extend((0..n).map(|j| format!("Y{}", j + 1)));
    if one {
        labels.push("W".into());
    }
    labels.push("Z1".into());
    labels.push("Z2".into());
    let alg = LieAlgebra::from_dense(labels, table)?;
    let mut gram = Matrix::zero(dim, dim);
    for j in 0..n {
        gram.set(x(j), x(j), rat(1));
        gram.set(y(j), y(j), rat(1));
    }
    if one {
        gram.set(w, w, rat(1));
    }
    gram.set(0, z1, rat(1));
    gram.set(z1, 0, rat(1));
    gram.set(1, z2, rat(1));
    gram.set(z2, 1, rat(1));
    let m = metric(alg, gram);
    assert!(is_invariant(&m), "double oscillator forms are invariant");
    assert_eq!(index_and_relative_index(&m).0, 2);
    Ok(m)
}

/// Metric cotangent algebra g ⋉_{ad*} g* with the dual-pairing form.
pub fn build_cotangent(g: &LieAlgebra) -> MetricLieAlgebra {
    let n = g.dim;
    let dim = 2 * n;
    let mut table = zero_table(dim);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = g.structure_constant(i, j, k);
                if !c.is_zero() {
                    table[i][j][k] = c.clone();
                    // coadjoint: [e_i, f_k] = -sum_j c_ijk f_j
                    table[i][n + k][n + j] = &table[i][n + k][n + j] - c;
                    table[n + k][i][n + j] = &table[n + k][i][n + j] + c;
                }
            }
        }
    }
    let mut labels = g.labels.clone();
    labels.extend(g.labels.iter().map(|l| format!("{l}*")));
    let alg = LieAlgebra::from_dense(labels, table).expect("coadjoint extension is a Lie algebra");
    let mut gram = Matrix::zero(dim, dim);
    for i in 0..n {
        gram.set(i, n + i, rat(1));
        gram.set(n + i, i, rat(1));
    }
    metric(alg, gram)
}

/// Nine-dimensional compact-radical pair: so3 acting on one of two abelian
/// so3 copies, paired against the compact factor with opposite signs. The
/// form is nil-invariant but not invariant; its metric radical is the
/// diagonal copy.
pub fn build_so3_pair() -> MetricLieAlgebra {
    let f = so3();
    let mut action = Vec::new();
    for i in 0..3 {
        let ad = f.ad_basis(i);
        let mut m = Matrix::zero(6, 6);
        for r in 0..3 {
            for c in 0..3 {
                m.set(r, c, ad.get(r, c).clone());
            }
        }
        action.push(m);
    }
    let alg = semidirect_product(&f, &LieAlgebra::abelian(6), &action).unwrap();
    let mut alg = alg;
    alg.labels = vec![
        "T1".into(),
        "T2".into(),
        "T3".into(),
        "L1".into(),
        "L2".into(),
        "L3".into(),
        "R1".into(),
        "R2".into(),
        "R3".into(),
    ];
    // <T_i, L_j> = kappa = -2 delta, <T_i, R_j> = +2 delta
    let mut gram = Matrix::zero(9, 9);
    for i in 0..3 {
        gram.set(i, 3 + i, rat(-2));
        gram.set(3 + i, i, rat(-2));
        gram.set(i, 6 + i, rat(2));
        gram.set(6 + i, i, rat(2));
    }
    metric(alg, gram)
}

/// Euclidean-type algebra (so3 ⋉ V1) x V0 whose metric radical is the graph
/// of an isomorphism V1 -> V0 (signature (3,3,3)); the radical is not an
/// ideal and the form is nil-invariant but not invariant.
pub fn build_graph_radical() -> MetricLieAlgebra {
    let f = so3();
    let mut action = Vec::new();
    for i in 0..3 {
        let ad = f.ad_basis(i);
        let mut m = Matrix::zero(6, 6);
        for r in 0..3 {
            for c in 0..3 {
                m.set(r, c, ad.get(r, c).clone());
            }
        }
        action.push(m);
    }
    let mut alg = semidirect_product(&f, &LieAlgebra::abelian(6), &action).unwrap();
    alg.labels = vec![
        "T1".into(),
        "T2".into(),
        "T3".into(),
        "u1".into(),
        "u2".into(),
        "u3".into(),
        "w1".into(),
        "w2".into(),
        "w3".into(),
    ];
    let mut gram = Matrix::zero(9, 9);
    for i in 0..3 {
        gram.set(i, 3 + i, rat(1));
        gram.set(3 + i, i, rat(1));
        gram.set(i, 6 + i, rat(-1));
        gram.set(6 + i, i, rat(-1));
    }
    metric(alg, gram)
}

/// The previous example with V0 embedded as the maximal torus of so6 and the
/// form extended definitely on a complement of the torus; signature (15,3,3).
pub fn build_graph_radical_torus() -> MetricLieAlgebra {
    let f = so3();
    let action: Vec<Matrix> = (0..3).map(|i| f.ad_basis(i)).collect();
    let part1 = semidirect_product(&f, &LieAlgebra::abelian(3), &action).unwrap();
    let so6 = so_n(6);
    let alg = direct_product_algebras(&[&part1, &so6]);
    // torus generators B12, B34, B56 at so6 indices 0, 9, 14
    let torus = [6 + 0, 6 + 9, 6 + 14];
    let mut gram = Matrix::zero(21, 21);
    for i in 0..3 {
        gram.set(i, 3 + i, rat(1));
        gram.set(3 + i, i, rat(1));
        gram.set(i, torus[i], rat(-1));
        gram.set(torus[i], i, rat(-1));
    }
    for j in 6..21 {
        if !torus.contains(&j) {
            gram.set(j, j, rat(1));
        }
    }
    metric(alg, gram)
}

/// sl2 with its Killing form (Lorentzian).
pub fn sl2_killing() -> MetricLieAlgebra {
    let g = sl2();
    let k = g.killing_form();
    metric(g, k)
}

/// so3 with the negated Killing form (positive definite).
pub fn so3_neg_killing() -> MetricLieAlgebra {
    let g = so3();
    let k = g.killing_form().neg();
    metric(g, k)
}

/// so3 with an indefinite form diag(1, 1, -1); still nil-invariant because
/// the algebra is of compact type.
pub fn so3_split_form() -> MetricLieAlgebra {
    let g = so3();
    let mut gram = Matrix::identity(3);
    gram.set(2, 2, rat(-1));
    metric(g, gram)
}

/// Orthogonal direct product of metric Lie algebras.
pub fn direct_product(parts: &[&MetricLieAlgebra]) -> MetricLieAlgebra {
    let algs: Vec<&LieAlgebra> = parts.iter().map(|m| &m.algebra).collect();
    let alg = direct_product_algebras(&algs);
    let n = alg.dim;
    let mut gram = Matrix::zero(n, n);
    let mut off = 0;
    for m in parts {
        let d = m.dim();
        for i in 0..d {
            for j in 0..d {
                gram.set(off + i, off + j, m.form.gram.get(i, j).clone());
            }
        }
        off += d;
    }
    metric(alg, gram)
}

pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub metric: MetricLieAlgebra,
}

fn entry(name: &str, description: &str, metric: MetricLieAlgebra) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        description: description.into(),
        metric,
    }
}

/// The fixed instance catalog the verification suites run over.
pub fn catalog() -> Vec<CatalogEntry> {
    let osc = standard_oscillator(1);
    let sl2k = sl2_killing();
    let so3nk = so3_neg_killing();
    vec![
        entry(
            "ab2",
            "definite abelian plane",
            build_abelian(2, 0).unwrap(),
        ),
        entry(
            "ab21",
            "Lorentzian abelian plane",
            build_abelian(2, 1).unwrap(),
        ),
        entry(
            "ab31",
            "Lorentzian abelian 3-space",
            build_abelian(3, 1).unwrap(),
        ),
        entry(
            "ab42",
            "index-2 abelian 4-space",
            build_abelian(4, 2).unwrap(),
        ),
        entry(
            "heis3",
            "Heisenberg h3, definite hermitian part",
            build_heisenberg(1, &[1]).unwrap(),
        ),
        entry(
            "heis5",
            "Heisenberg h5, definite hermitian part",
            build_heisenberg(2, &[1, 1]).unwrap(),
        ),
        entry(
            "heis5-ind1",
            "Heisenberg h5, hermitian index 1",
            build_heisenberg(2, &[1, -1]).unwrap(),
        ),
        entry(
            "osc",
            "standard oscillator, dim 4, Lorentzian",
            standard_oscillator(1),
        ),
        entry(
            "osc2",
            "standard oscillator, dim 6, Lorentzian",
            standard_oscillator(2),
        ),
        entry(
            "osc-nil2",
            "two-step nilpotent oscillator, dim 6",
            nilpotent_oscillator_two_step(),
        ),
        entry(
            "osc-nil3",
            "three-step nilpotent oscillator, dim 5",
            nilpotent_oscillator_three_step(),
        ),
        entry(
            "osc-alpha",
            "double oscillator, alpha = (1),(0)",
            build_osc_alpha(&[rat(1)], &[rat(0)], false).unwrap(),
        ),
        entry(
            "osc-alpha-12",
            "double oscillator, alpha = (1),(2)",
            build_osc_alpha(&[rat(1)], &[rat(2)], false).unwrap(),
        ),
        entry(
            "osc-alpha1-n0",
            "three-step double oscillator, n = 0",
            build_osc_alpha(&[], &[], true).unwrap(),
        ),
        entry(
            "osc-alpha1",
            "double oscillator with W, n = 1",
            build_osc_alpha(&[rat(1)], &[rat(1)], true).unwrap(),
        ),
        entry(
            "cotangent-sl2",
            "metric cotangent algebra of sl2",
            build_cotangent(&sl2()),
        ),
        entry(
            "cotangent-so3",
            "metric cotangent algebra of so3",
            build_cotangent(&so3()),
        ),
        entry(
            "cotangent-line",
            "metric cotangent algebra of the line",
            build_cotangent(&LieAlgebra::abelian(1)),
        ),
        entry("sl2", "sl2 with its Killing form", sl2_killing()),
        entry(
            "so3",
            "so3 with the negated Killing form",
            so3_neg_killing(),
        ),
        entry("so3-split", "so3 with an indefinite form", so3_split_form()),
        entry(
            "sl2-sl2",
            "sl2 x sl2, Killing forms",
            direct_product(&[&sl2k, &sl2k]),
        ),
        entry(
            "so3-pair",
            "nil-invariant but not invariant, dim 9",
            build_so3_pair(),
        ),
        entry(
            "graph-radical",
            "graph metric radical, signature (3,3,3)",
            build_graph_radical(),
        ),
        entry(
            "graph-radical-torus",
            "graph radical inside an so6 torus, signature (15,3,3)",
            build_graph_radical_torus(),
        ),
        entry(
            "class-c1",
            "abelian Lorentzian x compact",
            direct_product(&[&build_abelian(3, 1).unwrap(), &so3nk]),
        ),
        entry(
            "class-c2",
            "oscillator x compact",
            direct_product(&[&osc, &so3nk]),
        ),
        entry(
            "class-d1a",
            "index-2 abelian x compact",
            direct_product(&[&build_abelian(4, 2).unwrap(), &so3nk]),
        ),
        entry(
            "class-d1b",
            "oscillator x indefinite compact",
            direct_product(&[&osc, &so3_split_form()]),
        ),
        entry(
            "class-d3a",
            "abelian Lorentzian x sl2",
            direct_product(&[&build_abelian(3, 1).unwrap(), &sl2k]),
        ),
        entry(
            "class-d3b",
            "oscillator x sl2",
            direct_product(&[&osc, &sl2k]),
        ),
    ]
}

pub fn catalog_entry(name: &str) -> Option<MetricLieAlgebra> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.metric)
}
