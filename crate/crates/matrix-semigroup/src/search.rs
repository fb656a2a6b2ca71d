use std::collections::{HashMap, VecDeque};

use crate::matrix::{bool_mul, BoolMatrix, MatrixError};

pub const DEFAULT_ELEMENT_CAP: usize = 1 << 20;

/// Tri-valued outcome of the positive-product search. The cap never forges a
/// negative: `NoneExhausted` is only reported after the whole generated
/// semigroup has been enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductSearchOutcome {
    /// Generator indices of a shortest all-ones product, lexicographically
    /// first among shortest.
    Found(Vec<usize>),
    /// The generated semigroup is finite, fully enumerated, and contains no
    /// all-ones element.
    NoneExhausted { semigroup_size: usize },
    /// The element cap was hit before exhaustion; no conclusion.
    Inconclusive { cap: usize },
}

/// Breadth-first search over the semigroup generated by `generators` under
/// boolean multiplication, deduplicated by matrix value. Products extend on
/// the right, generators tried in index order, so the sequence returned is
/// the shortest one, ties broken lexicographically.
pub fn positive_product_search(
    generators: &[BoolMatrix],
    element_cap: usize,
) -> Result<ProductSearchOutcome, MatrixError> {
    if generators.is_empty() {
        return Err(MatrixError::EmptyGenerators);
    }
    let n = generators[0].n();
    for g in generators {
        if g.n() != n {
            return Err(MatrixError::DimensionMismatch {
                left: n,
                right: g.n(),
            });
        }
    }

    // parent chain for sequence reconstruction
    let mut parents: Vec<(u32, u16)> = Vec::new();
    let mut visited: HashMap<BoolMatrix, u32> = HashMap::new();
    let mut queue: VecDeque<(u32, BoolMatrix)> = VecDeque::new();

    let sequence_of = |parents: &[(u32, u16)], mut node: u32| -> Vec<usize> {
        let mut indices = Vec::new();
        loop {
            let (parent, generator) = parents[node as usize];
            indices.push(generator as usize);
            if parent == u32::MAX {
                break;
            }
            node = parent;
        }
        indices.reverse();
        indices
    };

    for (g_idx, g) in generators.iter().enumerate() {
        if g.is_all_ones() {
            return Ok(ProductSearchOutcome::Found(vec![g_idx]));
        }
        if visited.contains_key(g) {
            continue;
        }
        let id = parents.len() as u32;
        parents.push((u32::MAX, g_idx as u16));
        visited.insert(g.clone(), id);
        queue.push_back((id, g.clone()));
    }

    while let Some((node, matrix)) = queue.pop_front() {
        for (g_idx, g) in generators.iter().enumerate() {
            let product = bool_mul(&matrix, g)?;
            if visited.contains_key(&product) {
                continue;
            }
            if product.is_all_ones() {
                let mut sequence = sequence_of(&parents, node);
                sequence.push(g_idx);
                return Ok(ProductSearchOutcome::Found(sequence));
            }
            if visited.len() >= element_cap {
                return Ok(ProductSearchOutcome::Inconclusive { cap: element_cap });
            }
            let id = parents.len() as u32;
            parents.push((node, g_idx as u16));
            visited.insert(product.clone(), id);
            queue.push_back((id, product));
        }
    }

    Ok(ProductSearchOutcome::NoneExhausted {
        semigroup_size: visited.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_all_ones_generator() {
        let outcome = positive_product_search(&[BoolMatrix::ones(2)], 1024).unwrap();
        assert_eq!(outcome, ProductSearchOutcome::Found(vec![0]));
    }

    #[test]
    fn identity_alone_exhausts() {
        let outcome = positive_product_search(&[BoolMatrix::identity(2)], 1024).unwrap();
        assert_eq!(
            outcome,
            ProductSearchOutcome::NoneExhausted { semigroup_size: 1 }
        );
    }

    #[test]
    fn pair_combining_to_ones() {
        // g0 has row 0 all ones, g1 maps both rows onto row 0's pattern.
        let mut g0 = BoolMatrix::zero(2);
        g0.set(0, 0, true);
        g0.set(0, 1, true);
        let mut g1 = BoolMatrix::zero(2);
        g1.set(0, 0, true);
        g1.set(1, 0, true);
        let outcome = positive_product_search(&[g0, g1], 1024).unwrap();
        match outcome {
            ProductSearchOutcome::Found(seq) => {
                assert_eq!(seq, vec![1, 0]);
            }
            other => panic!("expected a product, got {other:?}"),
        }
    }

    #[test]
    fn cap_reports_inconclusive() {
        // Two generators over 3x3 grow past a cap of 2 without all-ones.
        let mut g0 = BoolMatrix::identity(3);
        g0.set(0, 1, true);
        let mut g1 = BoolMatrix::identity(3);
        g1.set(1, 2, true);
        let outcome = positive_product_search(&[g0, g1], 2).unwrap();
        assert_eq!(outcome, ProductSearchOutcome::Inconclusive { cap: 2 });
    }

    #[test]
    fn empty_generator_list_rejected() {
        assert!(positive_product_search(&[], 16).is_err());
    }
}
