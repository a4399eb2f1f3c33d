use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::varset::VarSet;

/// Stable names accepted by [`corpus`].
pub const CORPUS_NAMES: [&str; 4] = ["vechi", "ex3", "rp2", "k3join"];

/// Facets of the 6-vertex triangulation of the real projective plane.
pub const RP2_FACETS: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [1, 2, 6],
    [2, 3, 5],
    [2, 4, 5],
    [2, 4, 6],
    [3, 4, 6],
    [3, 5, 6],
];

fn set(xs: &[usize]) -> VarSet {
    VarSet::from_indices(xs.iter().copied(), 64).expect("corpus indices are in range")
}

/// Built-in instances, primes in their published order.
pub fn corpus(name: &str) -> Result<SquarefreeIdeal> {
    let (n, primes) = match name {
        "vechi" => (
            10,
            vec![
                VarSet::range(1, 7),
                VarSet::range(3, 8),
                VarSet::range(1, 4) | VarSet::range(8, 10),
                set(&[1, 2, 5, 8, 9, 10]),
                VarSet::range(5, 10),
            ],
        ),
        "ex3" => (
            12,
            vec![
                set(&[1, 4, 5, 6]) | VarSet::range(9, 12),
                set(&[1]) | VarSet::range(4, 10),
                set(&[1, 2, 3]) | VarSet::range(7, 12),
                set(&[1, 2, 3, 6, 7, 8, 11, 12]),
                VarSet::range(1, 8),
                VarSet::range(2, 6) | VarSet::range(9, 12),
            ],
        ),
        "rp2" => (6, RP2_FACETS.iter().map(|f| set(f).complement(6)).collect()),
        "k3join" => (6, vec![set(&[1, 2, 3, 4]), set(&[3, 4, 5, 6]), set(&[1, 2, 5, 6])]),
        other => return Err(Error::UnknownName(other.to_string())),
    };
    SquarefreeIdeal::new(n, primes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn shapes() {
        let vechi = corpus("vechi").unwrap();
        assert_eq!((vechi.n(), vechi.s()), (10, 5));
        assert_eq!(vechi.prime(1), Some(VarSet::range(1, 7)));
        let ex3 = corpus("ex3").unwrap();
        assert_eq!((ex3.n(), ex3.s()), (12, 6));
        assert_eq!(ex3.prime(1).unwrap().to_vec(), vec![1, 4, 5, 6, 9, 10, 11, 12]);
        let rp2 = corpus("rp2").unwrap();
        assert_eq!((rp2.n(), rp2.s()), (6, 10));
        assert!(rp2.primes().iter().all(|p| p.len() == 3));
        assert_eq!(corpus("nope"), Err(Error::UnknownName("nope".into())));
    }

    #[test]
    fn rp2_triangulation_is_a_closed_surface() {
        // Every edge lies in exactly two triangles and every vertex link is one cycle.
        let facets: Vec<VarSet> = RP2_FACETS.iter().map(|f| set(f)).collect();
        let edges: Vec<VarSet> = (1..=6).tuple_combinations().map(|(a, b)| set(&[a, b])).collect();
        for e in &edges {
            assert_eq!(facets.iter().filter(|f| e.is_subset(**f)).count(), 2, "edge {e}");
        }
        for v in 1..=6 {
            let link: Vec<VarSet> = facets
                .iter()
                .filter(|f| f.contains(v))
                .map(|&f| f - VarSet::singleton(v))
                .collect();
            assert_eq!(link.len(), 5);
            // A 5-cycle: every link vertex has degree two and the link is connected.
            let verts = link.iter().fold(VarSet::empty(), |a, &b| a | b);
            assert_eq!(verts.len(), 5);
            for w in verts {
                assert_eq!(link.iter().filter(|e| e.contains(w)).count(), 2);
            }
            let mut reach = VarSet::singleton(verts.min().unwrap());
            for _ in 0..5 {
                for e in &link {
                    if e.meets(reach) {
                        reach = reach | *e;
                    }
                }
            }
            assert_eq!(reach, verts);
        }
        let chi = 6i64 - edges.len() as i64 + facets.len() as i64;
        assert_eq!(chi, 1);
    }
}
