//! Exact dense linear algebra over `Q(zeta_n)`.
//!
//! Plain fraction-based Gauss-Jordan elimination: every entry is a [`Cyclo`]
//! and every pivot is inverted exactly in the field. The matrices that arise
//! here (braiding operators on tensor squares, boundary blocks of chain
//! complexes) are small enough that no pivoting strategy or modular tricks
//! are needed.

use crate::scalar::{Cyclo, CycloCtx};

/// Reduce `rows` in place to reduced row echelon form and return the pivot
/// column of each nonzero row, in order.
pub(crate) fn rref(ctx: &CycloCtx, rows: &mut [Vec<Cyclo>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(src) = (next_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, src);
        let inv = ctx
            .inv(&rows[next_row][col])
            .expect("pivot entry is nonzero");
        for c in col..ncols {
            rows[next_row][c] = ctx.mul(&rows[next_row][c], &inv);
        }
        for r in 0..nrows {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = ctx.mul(&factor, &rows[next_row][c]);
                    rows[r][c] = ctx.sub(&rows[r][c], &delta);
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == nrows {
            break;
        }
    }
    pivots
}

/// The rank of the matrix given by `rows`.
pub(crate) fn rank(ctx: &CycloCtx, mut rows: Vec<Vec<Cyclo>>) -> usize {
    rref(ctx, &mut rows).len()
}

/// A basis of the right nullspace `{v : A v = 0}` of the `len(rows) x ncols`
/// matrix `A`, one vector per free column.
pub(crate) fn nullspace(ctx: &CycloCtx, mut rows: Vec<Vec<Cyclo>>, ncols: usize) -> Vec<Vec<Cyclo>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let pivots = rref(ctx, &mut rows);
    let mut basis = Vec::with_capacity(ncols - pivots.len());
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![ctx.zero(); ncols];
        v[free] = ctx.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.neg(&rows[row][free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> CycloCtx {
        CycloCtx::new(18).unwrap()
    }

    fn ints(ctx: &CycloCtx, vals: &[&[i64]]) -> Vec<Vec<Cyclo>> {
        vals.iter()
            .map(|row| row.iter().map(|&v| ctx.from_int(v)).collect())
            .collect()
    }

    fn mat_vec(ctx: &CycloCtx, rows: &[Vec<Cyclo>], v: &[Cyclo]) -> Vec<Cyclo> {
        rows.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(ctx.zero(), |acc, (a, b)| ctx.add(&acc, &ctx.mul(a, b)))
            })
            .collect()
    }

    #[test]
    fn identity_has_full_rank_and_trivial_nullspace() {
        let ctx = ctx();
        let rows = ints(&ctx, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(rank(&ctx, rows.clone()), 3);
        assert!(nullspace(&ctx, rows, 3).is_empty());
    }

    #[test]
    fn rank_one_matrix() {
        let ctx = ctx();
        let rows = ints(&ctx, &[&[1, 2], &[2, 4], &[-3, -6]]);
        assert_eq!(rank(&ctx, rows.clone()), 1);
        let ns = nullspace(&ctx, rows, 2);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![ctx.from_int(-2), ctx.one()]);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let ctx = ctx();
        // Mix in genuine cyclotomic entries.
        let z = |k: i64| ctx.root(k);
        let rows = vec![
            vec![z(1), z(2), ctx.from_int(1), ctx.zero()],
            vec![ctx.zero(), z(5), z(1), ctx.from_int(-2)],
            vec![z(1), ctx.add(&z(2), &z(5)), ctx.add(&ctx.one(), &z(1)), ctx.from_int(-2)],
        ];
        // Third row is the sum of the first two, so the rank is 2.
        assert_eq!(rank(&ctx, rows.clone()), 2);
        let ns = nullspace(&ctx, rows.clone(), 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let image = mat_vec(&ctx, &rows, v);
            assert!(image.iter().all(Cyclo::is_zero), "A v != 0 for {v:?}");
        }
    }

    #[test]
    fn empty_and_zero_matrices() {
        let ctx = ctx();
        assert_eq!(rank(&ctx, Vec::new()), 0);
        let zero = vec![vec![ctx.zero(); 3]; 2];
        assert_eq!(rank(&ctx, zero.clone()), 0);
        assert_eq!(nullspace(&ctx, zero, 3).len(), 3);
        assert!(nullspace(&ctx, Vec::new(), 0).is_empty());
    }

    #[test]
    fn rank_plus_nullity_is_the_column_count() {
        let ctx = ctx();
        let rows = ints(
            &ctx,
            &[
                &[2, 0, 1, -1, 3],
                &[0, 1, 1, 0, 0],
                &[2, 1, 2, -1, 3],
                &[4, 1, 3, -2, 6],
            ],
        );
        let r = rank(&ctx, rows.clone());
        let ns = nullspace(&ctx, rows, 5);
        assert_eq!(r + ns.len(), 5);
        assert_eq!(r, 2);
    }
}
