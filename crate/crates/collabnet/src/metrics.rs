//! Descriptive network metrics and Freeman centralization.
//!
//! Conventions (applied uniformly so directed and undirected layers are
//! comparable on one scale):
//!
//! - average degree uses the total-degree convention 2m/n;
//! - geodesics are hop counts (edge weights ignored) and unreachable pairs
//!   are excluded from the average rather than imputed;
//! - clustering is the mean local coefficient on the undirected view, with
//!   degree-<2 nodes contributing 0;
//! - all four centralities are computed on the unweighted undirected view
//!   and normalized into [0, 1];
//! - centralization divides the Freeman sum by its star-graph maximum for
//!   the measure (the trivial n-1 bound for eigenvector) and clamps to [0, 1].

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::Network;

/// Whole-network centrality measures reported alongside the metrics table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Centrality {
    Degree,
    Betweenness,
    Closeness,
    Eigenvector,
}

impl Centrality {
    pub const ALL: [Centrality; 4] = [
        Centrality::Degree,
        Centrality::Betweenness,
        Centrality::Closeness,
        Centrality::Eigenvector,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Centrality::Degree => "degree",
            Centrality::Betweenness => "betweenness",
            Centrality::Closeness => "closeness",
            Centrality::Eigenvector => "eigenvector",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Centrality::ALL
            .iter()
            .find(|c| c.name() == s.trim().to_ascii_lowercase())
            .copied()
            .ok_or_else(|| Error::UnknownAttribute(format!("centrality `{s}`")))
    }
}

/// Flat metrics bundle; field names match the emitted key/value schema.
#[derive(Debug, Clone, Serialize)]
pub struct MetricsReport {
    pub nodes: usize,
    pub ties: usize,
    pub density: f64,
    pub avg_degree: f64,
    pub clustering: f64,
    pub avg_path_length: f64,
    pub centralization_degree: f64,
    pub centralization_betweenness: f64,
    pub centralization_closeness: f64,
    pub centralization_eigenvector: f64,
}

impl MetricsReport {
    /// Key/value rows in the emitted order.
    pub fn rows(&self) -> Vec<(&'static str, String)> {
        vec![
            ("nodes", self.nodes.to_string()),
            ("ties", self.ties.to_string()),
            ("density", format!("{}", self.density)),
            ("avg_degree", format!("{}", self.avg_degree)),
            ("clustering", format!("{}", self.clustering)),
            ("avg_path_length", format!("{}", self.avg_path_length)),
            ("centralization_degree", format!("{}", self.centralization_degree)),
            (
                "centralization_betweenness",
                format!("{}", self.centralization_betweenness),
            ),
            (
                "centralization_closeness",
                format!("{}", self.centralization_closeness),
            ),
            (
                "centralization_eigenvector",
                format!("{}", self.centralization_eigenvector),
            ),
        ]
    }
}

/// Tie density: m/(n(n-1)) directed, 2m/(n(n-1)) undirected.
pub fn density(net: &Network) -> Result<f64> {
    let n = net.node_count();
    if n < 2 {
        return Err(Error::DegenerateInput(
            "density needs at least 2 nodes".into(),
        ));
    }
    let m = net.edge_count() as f64;
    let pairs = (n * (n - 1)) as f64;
    Ok(if net.directed() { m / pairs } else { 2.0 * m / pairs })
}

/// Mean total degree, 2m/n for both directed and undirected networks.
pub fn average_degree(net: &Network) -> Result<f64> {
    let n = net.node_count();
    if n == 0 {
        return Err(Error::DegenerateInput("empty roster".into()));
    }
    Ok(2.0 * net.edge_count() as f64 / n as f64)
}

/// Mean local clustering coefficient on the undirected view. Nodes with
/// degree < 2 contribute 0 and are included in the mean.
pub fn clustering_coefficient(net: &Network) -> Result<f64> {
    let n = net.node_count();
    if n < 3 {
        return Err(Error::DegenerateInput(
            "clustering needs at least 3 nodes".into(),
        ));
    }
    let und = net.undirected_view();
    let neighbor_sets: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut v: Vec<usize> = und.neighbors_out(i).iter().map(|&(j, _)| j).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut total = 0.0;
    for neigh in &neighbor_sets {
        let d = neigh.len();
        if d < 2 {
            continue;
        }
        let mut links = 0usize;
        for (a, &u) in neigh.iter().enumerate() {
            for &v in &neigh[a + 1..] {
                if neighbor_sets[u].binary_search(&v).is_ok() {
                    links += 1;
                }
            }
        }
        total += 2.0 * links as f64 / (d * (d - 1)) as f64;
    }
    Ok(total / n as f64)
}

/// Mean geodesic hop count over all reachable ordered non-self pairs.
pub fn average_path_length(net: &Network, respect_direction: bool) -> Result<f64> {
    let n = net.node_count();
    let per_source: Vec<(u64, u64)> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut sum = 0u64;
            let mut count = 0u64;
            for (t, d) in net.hop_distances(s, respect_direction).iter().enumerate() {
                if t != s {
                    if let Some(d) = d {
                        sum += *d as u64;
                        count += 1;
                    }
                }
            }
            (sum, count)
        })
        .collect();
    let (sum, count) = per_source
        .iter()
        .fold((0u64, 0u64), |(s, c), &(ds, dc)| (s + ds, c + dc));
    if count == 0 {
        return Err(Error::DegenerateInput("no reachable non-self pairs".into()));
    }
    Ok(sum as f64 / count as f64)
}

/// Residual threshold for the power iteration; tighter than the 1e-10
/// contract so downstream equality checks at 1e-10 hold.
const EIGEN_RESIDUAL: f64 = 1e-13;
const EIGEN_MAX_ITERS: usize = 2_000_000;

/// Normalized centrality scores in network node order. All measures operate
/// on the unweighted undirected view.
pub fn centrality_scores(net: &Network, measure: Centrality) -> Result<Vec<f64>> {
    let n = net.node_count();
    if n < 2 {
        return Err(Error::DegenerateInput(
            "centrality needs at least 2 nodes".into(),
        ));
    }
    let und = net.undirected_view();
    match measure {
        Centrality::Degree => Ok((0..n)
            .map(|i| und.neighbors_out(i).len() as f64 / (n - 1) as f64)
            .collect()),
        Centrality::Betweenness => Ok(betweenness(&und)),
        Centrality::Closeness => Ok(closeness(&und)),
        Centrality::Eigenvector => eigenvector(&und),
    }
}

/// Centrality scores keyed by node id.
pub fn centrality(net: &Network, measure: Centrality) -> Result<BTreeMap<String, f64>> {
    let scores = centrality_scores(net, measure)?;
    Ok(net.ids().iter().cloned().zip(scores).collect())
}

/// Brandes' accumulation on the undirected view, pair-normalized.
fn betweenness(und: &Network) -> Vec<f64> {
    let n = und.node_count();
    if n < 3 {
        return vec![0.0; n];
    }
    // Per-source dependency vectors are collected in source order and summed
    // sequentially so the result is independent of thread scheduling.
    let partials: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut delta = vec![0.0f64; n];
            let mut sigma = vec![0.0f64; n];
            let mut dist = vec![-1i64; n];
            let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
            let mut stack = Vec::with_capacity(n);
            let mut queue = std::collections::VecDeque::new();
            sigma[s] = 1.0;
            dist[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                stack.push(v);
                for &(w, _) in und.neighbors_out(v) {
                    if dist[w] < 0 {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                    if dist[w] == dist[v] + 1 {
                        sigma[w] += sigma[v];
                        preds[w].push(v);
                    }
                }
            }
            let mut dep = vec![0.0f64; n];
            while let Some(w) = stack.pop() {
                for &v in &preds[w] {
                    dep[v] += sigma[v] / sigma[w] * (1.0 + dep[w]);
                }
                if w != s {
                    delta[w] += dep[w];
                }
            }
            delta
        })
        .collect();
    let mut raw = vec![0.0f64; n];
    for delta in &partials {
        for (acc, d) in raw.iter_mut().zip(delta) {
            *acc += d;
        }
    }
    // Each unordered pair was visited from both endpoints, so the factor two
    // folds into the (n-1)(n-2)/2 normalization.
    let scale = ((n - 1) * (n - 2)) as f64;
    raw.into_iter().map(|b| b / scale).collect()
}

/// Reachability-scaled closeness: (r/sum_d) * (r/(n-1)) with r the number of
/// reachable nodes excluding self; isolated nodes score 0.
fn closeness(und: &Network) -> Vec<f64> {
    let n = und.node_count();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let dist = und.hop_distances(i, false);
            let mut reach = 0u64;
            let mut sum = 0u64;
            for (j, d) in dist.iter().enumerate() {
                if j != i {
                    if let Some(d) = d {
                        reach += 1;
                        sum += *d as u64;
                    }
                }
            }
            if reach == 0 || sum == 0 {
                0.0
            } else {
                (reach as f64 / sum as f64) * (reach as f64 / (n - 1) as f64)
            }
        })
        .collect()
}

/// Principal-eigenvector scores on the largest component of the undirected
/// view, scaled to max 1; nodes outside that component score 0.
fn eigenvector(und: &Network) -> Result<Vec<f64>> {
    let n = und.node_count();
    let components = und.connected_components();
    let comp = components
        .iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
        .expect("non-empty network has components");
    let size = comp.len();
    let local: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); size];
    let mut edge_seen = false;
    for (&node, &k) in &local {
        for &(w, _) in und.neighbors_out(node) {
            adj[k].push(local[&w]);
            edge_seen = true;
        }
    }
    if !edge_seen {
        return Err(Error::DegenerateInput(
            "eigenvector centrality undefined: largest component has no edges".into(),
        ));
    }

    // Power iteration on A + I: the shift breaks bipartite oscillation while
    // preserving eigenvectors of the symmetric adjacency.
    let mut v = vec![1.0 / (size as f64).sqrt(); size];
    let mut next = vec![0.0f64; size];
    let mut converged = false;
    for _ in 0..EIGEN_MAX_ITERS {
        for (k, out) in next.iter_mut().enumerate() {
            let mut acc = v[k];
            for &j in &adj[k] {
                acc += v[j];
            }
            *out = acc;
        }
        let norm = next.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in next.iter_mut() {
            *x /= norm;
        }
        // Rayleigh quotient and residual on the shifted operator.
        let mut lambda = 0.0;
        for (k, &vk) in next.iter().enumerate() {
            let mut acc = vk;
            for &j in &adj[k] {
                acc += next[j];
            }
            lambda += vk * acc;
        }
        let mut residual = 0.0f64;
        for (k, &vk) in next.iter().enumerate() {
            let mut acc = vk;
            for &j in &adj[k] {
                acc += next[j];
            }
            residual = residual.max((acc - lambda * vk).abs());
        }
        std::mem::swap(&mut v, &mut next);
        if residual < EIGEN_RESIDUAL {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence(
            "eigenvector power iteration did not reach residual tolerance".into(),
        ));
    }

    let max = v.iter().cloned().fold(f64::MIN, f64::max);
    let mut scores = vec![0.0f64; n];
    for (&node, &k) in &local {
        scores[node] = (v[k] / max).clamp(0.0, 1.0);
    }
    Ok(scores)
}

/// Freeman centralization: sum of (c_max - c_i) over normalized scores,
/// divided by the measure's star-graph maximum, clamped to [0, 1].
pub fn centralization(net: &Network, measure: Centrality) -> Result<f64> {
    let n = net.node_count();
    if n < 3 {
        return Err(Error::DegenerateInput(
            "centralization needs at least 3 nodes".into(),
        ));
    }
    let scores = centrality_scores(net, measure)?;
    let c_max = scores.iter().cloned().fold(f64::MIN, f64::max);
    let sum: f64 = scores.iter().map(|c| c_max - c).sum();
    let nf = n as f64;
    let divisor = match measure {
        Centrality::Degree => nf - 2.0,
        Centrality::Betweenness => nf - 1.0,
        Centrality::Closeness => (nf - 1.0) * (nf - 2.0) / (2.0 * nf - 3.0),
        Centrality::Eigenvector => nf - 1.0,
    };
    Ok((sum / divisor).clamp(0.0, 1.0))
}

/// Computes the full metrics bundle for one network. Path lengths respect
/// edge direction on directed layers.
pub fn metrics_report(net: &Network) -> Result<MetricsReport> {
    Ok(MetricsReport {
        nodes: net.node_count(),
        ties: net.edge_count(),
        density: density(net)?,
        avg_degree: average_degree(net)?,
        clustering: clustering_coefficient(net)?,
        avg_path_length: average_path_length(net, net.directed())?,
        centralization_degree: centralization(net, Centrality::Degree)?,
        centralization_betweenness: centralization(net, Centrality::Betweenness)?,
        centralization_closeness: centralization(net, Centrality::Closeness)?,
        centralization_eigenvector: centralization(net, Centrality::Eigenvector)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Layer;
    use approx::assert_relative_eq;

    fn undirected(n: usize, edges: &[(usize, usize)]) -> Network {
        let ids: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
        let raw: Vec<(usize, usize, f64)> = edges.iter().map(|&(a, b)| (a, b, 1.0)).collect();
        Network::from_index_edges(Layer::Coauthorship, ids, &raw).unwrap().0
    }

    fn directed(n: usize, edges: &[(usize, usize)]) -> Network {
        let ids: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
        let raw: Vec<(usize, usize, f64)> = edges.iter().map(|&(a, b)| (a, b, 1.0)).collect();
        Network::from_index_edges(Layer::Information, ids, &raw).unwrap().0
    }

    fn complete(n: usize) -> Network {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        undirected(n, &edges)
    }

    fn cycle(n: usize) -> Network {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        undirected(n, &edges)
    }

    fn star(n: usize) -> Network {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
        undirected(n, &edges)
    }

    /// Directed network with the given node and edge counts, edges taken in
    /// lexicographic pair order.
    fn directed_with_counts(n: usize, m: usize) -> Network {
        let mut edges = Vec::with_capacity(m);
        'outer: for i in 0..n {
            for j in 0..n {
                if i != j {
                    edges.push((i, j));
                    if edges.len() == m {
                        break 'outer;
                    }
                }
            }
        }
        directed(n, &edges)
    }

    #[test]
    fn density_matches_reported_srg_information() {
        let net = directed_with_counts(34, 254);
        let d = density(&net).unwrap();
        assert_relative_eq!(d, 254.0 / 1122.0, max_relative = 1e-12);
        assert_eq!((d * 100.0).round() / 100.0, 0.23);
    }

    #[test]
    fn density_matches_reported_srg_trust() {
        let net = directed_with_counts(33, 163);
        let d = density(&net).unwrap();
        assert_relative_eq!(d, 163.0 / 1056.0, max_relative = 1e-12);
        assert_eq!((d * 100.0).round() / 100.0, 0.15);
    }

    #[test]
    fn density_of_k4_is_one() {
        assert_eq!(density(&complete(4)).unwrap(), 1.0);
    }

    #[test]
    fn density_degenerate_below_two_nodes() {
        let net = undirected(1, &[]);
        assert!(matches!(density(&net), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn average_degree_examples() {
        let srg_info = directed_with_counts(34, 254);
        assert_relative_eq!(
            average_degree(&srg_info).unwrap(),
            14.941176470588236,
            max_relative = 1e-12
        );
        let galup_trust = directed_with_counts(18, 65);
        assert_relative_eq!(
            average_degree(&galup_trust).unwrap(),
            65.0 * 2.0 / 18.0,
            max_relative = 1e-12
        );
        let edgeless = undirected(5, &[]);
        assert_eq!(average_degree(&edgeless).unwrap(), 0.0);
    }

    #[test]
    fn clustering_triangle_and_path() {
        let tri = undirected(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(clustering_coefficient(&tri).unwrap(), 1.0);
        let path = undirected(3, &[(0, 1), (1, 2)]);
        assert_eq!(clustering_coefficient(&path).unwrap(), 0.0);
    }

    #[test]
    fn clustering_k4_minus_edge_matches_triangle_oracle() {
        // K4 without the (2,3) edge; brute-force triangle enumeration gives
        // c = 2/3 for nodes 0,1 and c = 1 for nodes 2,3.
        let net = undirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let expected = (2.0 / 3.0 + 2.0 / 3.0 + 1.0 + 1.0) / 4.0;
        assert_relative_eq!(
            clustering_coefficient(&net).unwrap(),
            expected,
            max_relative = 1e-12
        );
    }

    #[test]
    fn path_length_k4_and_cycle() {
        assert_eq!(average_path_length(&complete(4), false).unwrap(), 1.0);
        assert_relative_eq!(
            average_path_length(&cycle(5), false).unwrap(),
            1.5,
            max_relative = 1e-12
        );
    }

    #[test]
    fn path_length_with_unreachable_pairs() {
        // a→b with c isolated: a single reachable ordered pair.
        let net = directed(3, &[(0, 1)]);
        assert_eq!(average_path_length(&net, true).unwrap(), 1.0);
    }

    #[test]
    fn path_length_degenerate_when_no_pairs() {
        let net = undirected(3, &[]);
        assert!(matches!(
            average_path_length(&net, false),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn star_degree_centrality() {
        let net = star(5);
        let scores = centrality(&net, Centrality::Degree).unwrap();
        assert_eq!(scores["n0"], 1.0);
        for leaf in 1..5 {
            assert_eq!(scores[&format!("n{leaf}")], 0.25);
        }
    }

    #[test]
    fn cycle_betweenness_is_uniform() {
        let scores = centrality_scores(&cycle(6), Centrality::Betweenness).unwrap();
        for w in scores.windows(2) {
            assert_relative_eq!(w[0], w[1], max_relative = 1e-12);
        }
    }

    #[test]
    fn centrality_values_in_unit_interval() {
        let net = undirected(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 4)]);
        for measure in Centrality::ALL {
            for (_, score) in centrality(&net, measure).unwrap() {
                assert!((0.0..=1.0).contains(&score), "{measure:?}: {score}");
            }
        }
    }

    #[test]
    fn star_centralization_is_maximal() {
        assert_relative_eq!(
            centralization(&star(5), Centrality::Degree).unwrap(),
            1.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            centralization(&star(7), Centrality::Degree).unwrap(),
            1.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            centralization(&star(5), Centrality::Betweenness).unwrap(),
            1.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            centralization(&star(5), Centrality::Closeness).unwrap(),
            1.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn regular_graphs_have_zero_centralization() {
        for measure in Centrality::ALL {
            assert_relative_eq!(
                centralization(&complete(5), measure).unwrap(),
                0.0,
                epsilon = 1e-10
            );
            assert_relative_eq!(
                centralization(&cycle(6), measure).unwrap(),
                0.0,
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn eigenvector_star_ratio() {
        // Analytic principal eigenvector of a star: leaves at 1/sqrt(n-1).
        let scores = centrality(&star(5), Centrality::Eigenvector).unwrap();
        assert_relative_eq!(scores["n0"], 1.0, max_relative = 1e-10);
        for leaf in 1..5 {
            assert_relative_eq!(scores[&format!("n{leaf}")], 0.5, max_relative = 1e-9);
        }
    }

    #[test]
    fn eigenvector_on_edgeless_graph_is_degenerate() {
        let net = undirected(4, &[]);
        assert!(matches!(
            centrality_scores(&net, Centrality::Eigenvector),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn density_identity_reproduces_tie_count() {
        let net = directed_with_counts(21, 107);
        let d = density(&net).unwrap();
        assert_relative_eq!(d * 21.0 * 20.0, 107.0, max_relative = 1e-12);
    }

    #[test]
    fn report_runs_on_directed_network() {
        let net = directed_with_counts(6, 14);
        let report = metrics_report(&net).unwrap();
        assert_eq!(report.nodes, 6);
        assert_eq!(report.ties, 14);
        assert!(report.density > 0.0 && report.density <= 1.0);
        let keys: Vec<&str> = report.rows().iter().map(|(k, _)| *k).collect();
        assert_eq!(
            keys,
            vec![
                "nodes",
                "ties",
                "density",
                "avg_degree",
                "clustering",
                "avg_path_length",
                "centralization_degree",
                "centralization_betweenness",
                "centralization_closeness",
                "centralization_eigenvector"
            ]
        );
    }
}
