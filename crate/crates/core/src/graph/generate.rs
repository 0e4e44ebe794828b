use super::Graph;
use crate::budget::Budget;
use crate::error::Result;

/// Number of graphs with exactly `n` vertices and `m` edges: `n^(2m)`.
pub fn count_graphs(n: usize, m: usize) -> u128 {
    (n as u128).checked_pow(2 * m as u32).unwrap_or(u128::MAX)
}

/// Every graph with exactly `n` vertices and `m` edges, each edge ranging
/// over all `(source, target)` pairs.
///
/// Vertices are named `v1..vn` and edges `e1..em`. Graphs come in
/// lexicographic order of `(src(e1), tgt(e1), src(e2), ...)`.
pub fn all_graphs(n: usize, m: usize, budget: &Budget) -> Result<Vec<Graph>> {
    let total = count_graphs(n, m);
    budget.check_graphs(total)?;
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut graphs = Vec::with_capacity(total as usize);
    let mut digits = vec![0usize; 2 * m];
    for _ in 0..total {
        let edges = (0..m)
            .map(|j| (format!("e{}", j + 1), digits[2 * j], digits[2 * j + 1]))
            .collect();
        graphs.push(Graph::new(vertices.clone(), edges)?);
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn counts() {
        let b = Budget::default();
        assert_eq!(all_graphs(1, 1, &b).unwrap().len(), 1);
        assert_eq!(all_graphs(2, 1, &b).unwrap().len(), 4);
        assert_eq!(all_graphs(2, 2, &b).unwrap().len(), 16);
        assert_eq!(all_graphs(0, 0, &b).unwrap().len(), 1);
        assert_eq!(all_graphs(0, 2, &b).unwrap().len(), 0);
        assert_eq!(all_graphs(3, 0, &b).unwrap().len(), 1);
    }

    #[test]
    fn graphs_are_distinct_and_ordered() {
        let graphs = all_graphs(2, 2, &Budget::default()).unwrap();
        let unique: std::collections::HashSet<_> = graphs.iter().collect();
        assert_eq!(unique.len(), graphs.len());
        let first = &graphs[0];
        assert!(first
            .edges()
            .iter()
            .all(|e| e.source.0 == 0 && e.target.0 == 0));
        let second = &graphs[1];
        assert_eq!(second.edges()[1].target.0, 1);
    }

    #[test]
    fn single_self_loop() {
        let g = &all_graphs(1, 1, &Budget::default()).unwrap()[0];
        assert_eq!(g.edges()[0].source, g.edges()[0].target);
    }

    #[test]
    fn respects_budget() {
        let b = Budget {
            max_graphs: 100,
            ..Budget::default()
        };
        assert!(matches!(all_graphs(3, 3, &b), Err(Error::Budget { .. })));
    }
}
