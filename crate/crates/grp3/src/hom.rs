//! Homomorphisms between finitely generated abelian 3-groups, with kernel and
//! cokernel computation.

use crate::group::FinAbelian3Group;
use crate::snf::{diagonalize_with, val3};
use crate::Grp3Error;

/// A homomorphism between two groups in canonical form.
///
/// Generators of each group are indexed cyclic-first (in the canonical
/// descending-exponent order) followed by the free generators. `matrix[t][s]`
/// is the coefficient of target generator `t` in the image of source
/// generator `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: FinAbelian3Group,
    pub target: FinAbelian3Group,
    pub matrix: Vec<Vec<i64>>,
}

impl GroupHom {
    pub fn new(
        source: FinAbelian3Group,
        target: FinAbelian3Group,
        matrix: Vec<Vec<i64>>,
    ) -> Result<Self, Grp3Error> {
        let m = target.cyclic.len() + target.free_rank;
        let n = source.cyclic.len() + source.free_rank;
        if matrix.len() != m || matrix.iter().any(|row| row.len() != n) {
            return Err(Grp3Error::DimensionMismatch(format!(
                "hom matrix must be {}x{}",
                m, n
            )));
        }
        let hom = GroupHom {
            source,
            target,
            matrix,
        };
        hom.check_well_formed()?;
        Ok(hom)
    }

    /// The zero map.
    pub fn zero(source: FinAbelian3Group, target: FinAbelian3Group) -> Self {
        let m = target.cyclic.len() + target.free_rank;
        let n = source.cyclic.len() + source.free_rank;
        GroupHom {
            source,
            target,
            matrix: vec![vec![0; n]; m],
        }
    }

    /// Multiplication by an integer as an endomorphism.
    pub fn mult_by(group: FinAbelian3Group, c: i64) -> Self {
        let n = group.cyclic.len() + group.free_rank;
        let mut matrix = vec![vec![0; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = c;
        }
        GroupHom {
            source: group.clone(),
            target: group,
            matrix,
        }
    }

    /// A generator of the source must map to an element killed by the
    /// generator's order.
    fn check_well_formed(&self) -> Result<(), Grp3Error> {
        let sc = self.source.cyclic.len();
        for s in 0..sc {
            let order = 3i128.pow(self.source.cyclic[s]);
            for (t, row) in self.matrix.iter().enumerate() {
                let coeff = i128::from(row[s]);
                if t < self.target.cyclic.len() {
                    let torder = 3i128.pow(self.target.cyclic[t]);
                    if (order * coeff) % torder != 0 {
                        return Err(Grp3Error::IllFormedHom(s));
                    }
                } else if coeff != 0 {
                    // Torsion cannot map into a free summand.
                    return Err(Grp3Error::IllFormedHom(s));
                }
            }
        }
        Ok(())
    }

    /// Kernel and cokernel, both in canonical form.
    pub fn kernel_cokernel(&self) -> (FinAbelian3Group, FinAbelian3Group) {
        let sc = self.source.cyclic.len();
        let n = sc + self.source.free_rank;
        let tc = self.target.cyclic.len();
        let m = tc + self.target.free_rank;

        // Map into the zero group: everything is kernel, nothing cokernel.
        if m == 0 {
            return (self.source.clone(), FinAbelian3Group::zero());
        }

        // Presentation matrices: target relations are the diagonal 3^e.
        // Combined matrix M = [F | R_target] : Z^(n+tc) -> Z^m.
        let mut mat: Vec<Vec<i128>> = vec![vec![0; n + tc]; m];
        for (t, row) in self.matrix.iter().enumerate() {
            for (s, &v) in row.iter().enumerate() {
                mat[t][s] = i128::from(v);
            }
        }
        for t in 0..tc {
            mat[t][n + t] = 3i128.pow(self.target.cyclic[t]);
        }

        // Cokernel: Z^m modulo the column lattice of M.
        let coker = {
            let d = diagonalize_with(mat.clone(), vec![vec![]; m]);
            let free = m - d.rank;
            let cyc: Vec<u32> = d
                .diag
                .iter()
                .filter(|&&x| x != 0)
                .map(|&x| val3(x))
                .collect();
            FinAbelian3Group::new(free, cyc)
        };

        // Kernel: first find a lattice basis of ker(M), project to the first
        // n coordinates (a generating set of the preimage lattice K), then
        // quotient K by the source relations.
        let kernel = {
            let d = diagonalize_with(mat, vec![vec![]; m]);
            let kdim = (n + tc) - d.rank;
            // Projected spanning vectors of K as columns of an n x kdim matrix.
            let mut proj: Vec<Vec<i128>> = vec![vec![0; kdim]; n];
            for (kcol, c) in (d.rank..n + tc).enumerate() {
                for r in 0..n {
                    proj[r][kcol] = d.v[r][c];
                }
            }
            // Source relation columns, to be rewritten in a basis of K.
            let mut rel: Vec<Vec<i128>> = vec![vec![0; sc]; n];
            for (s, row) in rel.iter_mut().enumerate().take(sc) {
                row[s] = 3i128.pow(self.source.cyclic[s]);
            }
            let dk = diagonalize_with(proj, rel);
            // K has rank dk.rank; relations expressed in the basis are
            // companion rows divided by the diagonal entries.
            let mut x: Vec<Vec<i128>> = vec![vec![0; sc]; dk.rank];
            for i in 0..dk.rank {
                for j in 0..sc {
                    assert!(
                        dk.companion[i][j] % dk.diag[i] == 0,
                        "source relations must lie in the preimage lattice"
                    );
                    x[i][j] = dk.companion[i][j] / dk.diag[i];
                }
            }
            for i in dk.rank..dk.companion.len() {
                for j in 0..sc {
                    assert!(dk.companion[i][j] == 0, "relations must lie in K");
                }
            }
            let dx = diagonalize_with(x, vec![vec![]; dk.rank]);
            let free = dk.rank - dx.rank;
            let cyc: Vec<u32> = dx
                .diag
                .iter()
                .filter(|&&v| v != 0)
                .map(|&v| val3(v))
                .collect();
            FinAbelian3Group::new(free, cyc)
        };

        (kernel, coker)
    }
}
