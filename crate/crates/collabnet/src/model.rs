//! Attributed-graph data model: researchers, rosters, and network layers.
//!
//! All types are immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Geographic point in decimal degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Location {
    pub lat: f64,
    pub lon: f64,
}

impl Location {
    /// Validates that both coordinates are finite and in range
    /// (lat in [-90, 90], lon in [-180, 180]).
    pub fn new(lat: f64, lon: f64) -> Result<Self> {
        let ok = lat.is_finite()
            && lon.is_finite()
            && (-90.0..=90.0).contains(&lat)
            && (-180.0..=180.0).contains(&lon);
        if ok {
            Ok(Self { lat, lon })
        } else {
            Err(Error::Coordinates { lat, lon })
        }
    }
}

/// Highest degree obtained, ordered from high school up to doctorate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Education {
    HighSchool,
    Bachelor,
    Masters,
    Doctorate,
}

impl Education {
    pub const LEVELS: [Education; 4] = [
        Education::HighSchool,
        Education::Bachelor,
        Education::Masters,
        Education::Doctorate,
    ];

    /// Accepts exactly the four level names, case-insensitively.
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "high school" => Some(Education::HighSchool),
            "bachelor" => Some(Education::Bachelor),
            "masters" => Some(Education::Masters),
            "doctorate" => Some(Education::Doctorate),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Education::HighSchool => "high school",
            Education::Bachelor => "bachelor",
            Education::Masters => "masters",
            Education::Doctorate => "doctorate",
        }
    }
}

/// Categorical researcher attributes usable for homophily and dyadic
/// difference indicators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Attribute {
    Gender,
    Education,
    Discipline,
    Employer,
    CountryOrigin,
    CountryResidence,
    RaceEthnicity,
}

impl Attribute {
    pub const ALL: [Attribute; 7] = [
        Attribute::Gender,
        Attribute::Education,
        Attribute::Discipline,
        Attribute::Employer,
        Attribute::CountryOrigin,
        Attribute::CountryResidence,
        Attribute::RaceEthnicity,
    ];

    /// Column/flag name; matches the nodes-file schema.
    pub fn name(&self) -> &'static str {
        match self {
            Attribute::Gender => "gender",
            Attribute::Education => "education",
            Attribute::Discipline => "discipline",
            Attribute::Employer => "employer",
            Attribute::CountryOrigin => "country_origin",
            Attribute::CountryResidence => "country_residence",
            Attribute::RaceEthnicity => "race_ethnicity",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let needle = s.trim().to_ascii_lowercase();
        Attribute::ALL
            .iter()
            .find(|a| a.name() == needle)
            .copied()
            .ok_or_else(|| Error::UnknownAttribute(s.to_string()))
    }
}

impl std::fmt::Display for Attribute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A node of the collaboration networks. Missing attribute values are
/// first-class (`None`) rather than dropping the researcher.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Researcher {
    pub id: String,
    pub label: Option<String>,
    pub gender: Option<String>,
    pub education: Option<Education>,
    pub discipline: Option<String>,
    pub employer: Option<String>,
    pub country_origin: Option<String>,
    pub country_residence: Option<String>,
    pub race_ethnicity: Option<String>,
    pub location: Option<Location>,
}

impl Researcher {
    /// A researcher with the given id and every attribute missing.
    pub fn bare(id: impl Into<String>) -> Self {
        Researcher {
            id: id.into(),
            label: None,
            gender: None,
            education: None,
            discipline: None,
            employer: None,
            country_origin: None,
            country_residence: None,
            race_ethnicity: None,
            location: None,
        }
    }

    /// Categorical value for `attr`, if known. Education is reported as its
    /// level name so all attributes share one string-valued view.
    pub fn attribute(&self, attr: Attribute) -> Option<&str> {
        match attr {
            Attribute::Gender => self.gender.as_deref(),
            Attribute::Education => self.education.map(Education::as_str),
            Attribute::Discipline => self.discipline.as_deref(),
            Attribute::Employer => self.employer.as_deref(),
            Attribute::CountryOrigin => self.country_origin.as_deref(),
            Attribute::CountryResidence => self.country_residence.as_deref(),
            Attribute::RaceEthnicity => self.race_ethnicity.as_deref(),
        }
    }
}

/// An ordered collection of researchers with unique, non-empty ids.
#[derive(Debug, Clone)]
pub struct Roster {
    researchers: Vec<Researcher>,
    index: HashMap<String, usize>,
}

impl Roster {
    pub fn new(researchers: Vec<Researcher>) -> Result<Self> {
        let mut index = HashMap::with_capacity(researchers.len());
        for (i, r) in researchers.iter().enumerate() {
            if r.id.is_empty() {
                return Err(Error::Parse {
                    row: i + 1,
                    message: "empty researcher id".into(),
                });
            }
            if index.insert(r.id.clone(), i).is_some() {
                return Err(Error::DuplicateId(r.id.clone()));
            }
        }
        Ok(Roster { researchers, index })
    }

    pub fn len(&self) -> usize {
        self.researchers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.researchers.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Researcher> {
        self.researchers.iter()
    }

    pub fn get(&self, id: &str) -> Option<&Researcher> {
        self.index.get(id).map(|&i| &self.researchers[i])
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn by_index(&self, i: usize) -> &Researcher {
        &self.researchers[i]
    }
}

/// Network layer. Information and trust are directed and unweighted;
/// co-authorship is undirected and weighted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Layer {
    Information,
    Trust,
    Coauthorship,
}

impl Layer {
    pub fn directed(&self) -> bool {
        !matches!(self, Layer::Coauthorship)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Layer::Information => "information",
            Layer::Trust => "trust",
            Layer::Coauthorship => "coauthorship",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "information" => Ok(Layer::Information),
            "trust" => Ok(Layer::Trust),
            "coauthorship" => Ok(Layer::Coauthorship),
            other => Err(Error::UnknownAttribute(format!("layer `{other}`"))),
        }
    }
}

impl std::fmt::Display for Layer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    In,
    Out,
    Total,
}

/// A canonicalized edge. For undirected networks `src < dst`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: f64,
}

/// What the canonicalization pass removed or merged while building a network.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CanonicalizationNotes {
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

/// One named layer of ties over a fixed node set. Nodes are referenced by
/// dense indices into `ids`; edges are stored once in canonical order.
#[derive(Debug, Clone)]
pub struct Network {
    layer: Layer,
    directed: bool,
    ids: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<(usize, f64)>>,
    in_adj: Vec<Vec<(usize, f64)>>,
}

impl Network {
    /// Builds a network in the layer's natural directedness from raw indexed
    /// edges. Self-loops are dropped (counted in the notes); duplicate edges
    /// are collapsed to one on binary layers and accumulate weight on the
    /// co-authorship layer.
    pub fn from_index_edges(
        layer: Layer,
        ids: Vec<String>,
        raw: &[(usize, usize, f64)],
    ) -> Result<(Self, CanonicalizationNotes)> {
        Self::assemble(layer, layer.directed(), ids, raw)
    }

    /// Builds a network resolving endpoints by id. Unknown endpoints are a
    /// hard error here; lenient handling (drop and report) lives in ingest.
    pub fn from_id_edges(
        layer: Layer,
        ids: Vec<String>,
        raw: &[(String, String, f64)],
    ) -> Result<(Self, CanonicalizationNotes)> {
        let index: HashMap<&str, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();
        let mut indexed = Vec::with_capacity(raw.len());
        for (src, dst, w) in raw {
            let s = *index
                .get(src.as_str())
                .ok_or_else(|| Error::UnknownId(src.clone()))?;
            let d = *index
                .get(dst.as_str())
                .ok_or_else(|| Error::UnknownId(dst.clone()))?;
            indexed.push((s, d, *w));
        }
        Self::from_index_edges(layer, ids, &indexed)
    }

    /// Internal assembly used by both the public constructors and derived
    /// views (which may override the layer's natural directedness).
    fn assemble(
        layer: Layer,
        directed: bool,
        ids: Vec<String>,
        raw: &[(usize, usize, f64)],
    ) -> Result<(Self, CanonicalizationNotes)> {
        let n = ids.len();
        let mut index = HashMap::with_capacity(n);
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }

        let mut notes = CanonicalizationNotes::default();
        let mut merged: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for &(src, dst, weight) in raw {
            if src >= n || dst >= n {
                return Err(Error::UnknownId(format!(
                    "edge endpoint index {} out of range",
                    src.max(dst)
                )));
            }
            if !weight.is_finite() || weight <= 0.0 {
                return Err(Error::Shape(format!(
                    "edge ({}, {}) has non-positive weight {}",
                    ids[src], ids[dst], weight
                )));
            }
            if src == dst {
                notes.self_loops_dropped += 1;
                continue;
            }
            let key = if directed {
                (src, dst)
            } else {
                (src.min(dst), src.max(dst))
            };
            match merged.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    // Binary layers carry unit weights regardless of input.
                    e.insert(if directed { 1.0 } else { weight });
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    notes.duplicates_collapsed += 1;
                    if !directed {
                        *e.get_mut() += weight;
                    }
                }
            }
        }

        let edges: Vec<Edge> = merged
            .into_iter()
            .map(|((src, dst), weight)| Edge { src, dst, weight })
            .collect();

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for e in &edges {
            out_adj[e.src].push((e.dst, e.weight));
            if directed {
                in_adj[e.dst].push((e.src, e.weight));
            } else {
                out_adj[e.dst].push((e.src, e.weight));
            }
        }

        Ok((
            Network {
                layer,
                directed,
                ids,
                index,
                edges,
                out_adj,
                in_adj,
            },
            notes,
        ))
    }

    pub fn layer(&self) -> Layer {
        self.layer
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn node_index(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Outgoing neighbors for directed networks; all neighbors otherwise.
    pub fn neighbors_out(&self, i: usize) -> &[(usize, f64)] {
        &self.out_adj[i]
    }

    /// Incoming neighbors for directed networks; all neighbors otherwise.
    pub fn neighbors_in(&self, i: usize) -> &[(usize, f64)] {
        if self.directed {
            &self.in_adj[i]
        } else {
            &self.out_adj[i]
        }
    }

    pub fn degree(&self, node: &str, mode: DegreeMode) -> Result<usize> {
        Ok(self.degree_by_index(self.node_index(node)?, mode))
    }

    pub fn degree_by_index(&self, i: usize, mode: DegreeMode) -> usize {
        if self.directed {
            match mode {
                DegreeMode::In => self.in_adj[i].len(),
                DegreeMode::Out => self.out_adj[i].len(),
                DegreeMode::Total => self.in_adj[i].len() + self.out_adj[i].len(),
            }
        } else {
            self.out_adj[i].len()
        }
    }

    pub fn weighted_degree(&self, node: &str, mode: DegreeMode) -> Result<f64> {
        Ok(self.weighted_degree_by_index(self.node_index(node)?, mode))
    }

    pub fn weighted_degree_by_index(&self, i: usize, mode: DegreeMode) -> f64 {
        let sum = |adj: &[(usize, f64)]| adj.iter().map(|&(_, w)| w).sum::<f64>();
        if self.directed {
            match mode {
                DegreeMode::In => sum(&self.in_adj[i]),
                DegreeMode::Out => sum(&self.out_adj[i]),
                DegreeMode::Total => sum(&self.in_adj[i]) + sum(&self.out_adj[i]),
            }
        } else {
            sum(&self.out_adj[i])
        }
    }

    /// Breadth-first geodesic hop counts from `source`. Edge weights are
    /// ignored; unreachable nodes are `None`; the self distance is 0.
    pub fn hop_distances(&self, source: usize, respect_direction: bool) -> Vec<Option<u32>> {
        let n = self.node_count();
        let mut dist: Vec<Option<u32>> = vec![None; n];
        dist[source] = Some(0);
        let mut queue = VecDeque::with_capacity(n);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].expect("queued nodes have distances");
            let visit = |w: usize, dist: &mut Vec<Option<u32>>, queue: &mut VecDeque<usize>| {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            };
            for &(w, _) in &self.out_adj[v] {
                visit(w, &mut dist, &mut queue);
            }
            if self.directed && !respect_direction {
                for &(w, _) in &self.in_adj[v] {
                    visit(w, &mut dist, &mut queue);
                }
            }
        }
        dist
    }

    /// Geodesic hop counts keyed by node id; `None` marks unreachable nodes.
    pub fn shortest_path_lengths(
        &self,
        source: &str,
        respect_direction: bool,
    ) -> Result<BTreeMap<String, Option<usize>>> {
        let s = self.node_index(source)?;
        let dist = self.hop_distances(s, respect_direction);
        Ok(self
            .ids
            .iter()
            .zip(dist)
            .map(|(id, d)| (id.clone(), d.map(|d| d as usize)))
            .collect())
    }

    /// Symmetrized view: edge {i, j} present iff i→j or j→i, with weights
    /// summed across both directions. Idempotent on undirected inputs.
    pub fn undirected_view(&self) -> Network {
        if !self.directed {
            return self.clone();
        }
        let mut sums: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for e in &self.edges {
            let key = (e.src.min(e.dst), e.src.max(e.dst));
            *sums.entry(key).or_insert(0.0) += e.weight;
        }
        let raw: Vec<(usize, usize, f64)> =
            sums.into_iter().map(|((s, d), w)| (s, d, w)).collect();
        let (net, _) = Network::assemble(self.layer, false, self.ids.clone(), &raw)
            .expect("canonical edges rebuild");
        net
    }

    /// Weak components (direction ignored). Each component is sorted by node
    /// index; components are ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::new();
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                let visit = |w: usize, seen: &mut Vec<bool>, queue: &mut VecDeque<usize>| {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                };
                for &(w, _) in &self.out_adj[v] {
                    visit(w, &mut seen, &mut queue);
                }
                if self.directed {
                    for &(w, _) in &self.in_adj[v] {
                        visit(w, &mut seen, &mut queue);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Set of directed (or canonical undirected) index pairs with an edge.
    pub fn edge_set(&self) -> HashSet<(usize, usize)> {
        self.edges.iter().map(|e| (e.src, e.dst)).collect()
    }

    /// True if an edge exists between the endpoints; for directed networks
    /// only the i→j direction is checked.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.out_adj[i].iter().any(|&(w, _)| w == j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn triangle() -> Network {
        let (net, _) = Network::from_index_edges(
            Layer::Coauthorship,
            ids(&["a", "b", "c"]),
            &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)],
        )
        .unwrap();
        net
    }

    #[test]
    fn degree_on_undirected_triangle() {
        let net = triangle();
        for node in ["a", "b", "c"] {
            assert_eq!(net.degree(node, DegreeMode::Total).unwrap(), 2);
            assert_eq!(net.degree(node, DegreeMode::In).unwrap(), 2);
            assert_eq!(net.degree(node, DegreeMode::Out).unwrap(), 2);
        }
    }

    #[test]
    fn degree_on_single_directed_edge() {
        let (net, _) =
            Network::from_index_edges(Layer::Trust, ids(&["a", "b"]), &[(0, 1, 1.0)]).unwrap();
        assert_eq!(net.degree("b", DegreeMode::In).unwrap(), 1);
        assert_eq!(net.degree("b", DegreeMode::Out).unwrap(), 0);
        assert_eq!(net.degree("b", DegreeMode::Total).unwrap(), 1);
    }

    #[test]
    fn degree_with_isolated_node() {
        // a→b, a→c, d isolated.
        let (net, _) = Network::from_index_edges(
            Layer::Information,
            ids(&["a", "b", "c", "d"]),
            &[(0, 1, 1.0), (0, 2, 1.0)],
        )
        .unwrap();
        assert_eq!(net.degree("a", DegreeMode::Out).unwrap(), 2);
        assert_eq!(net.degree("d", DegreeMode::Total).unwrap(), 0);
    }

    #[test]
    fn unknown_node_is_identifier_error() {
        let net = triangle();
        assert!(matches!(
            net.degree("zzz", DegreeMode::Total),
            Err(Error::UnknownId(_))
        ));
    }

    #[test]
    fn path_lengths_on_path_graph() {
        let (net, _) = Network::from_index_edges(
            Layer::Coauthorship,
            ids(&["a", "b", "c"]),
            &[(0, 1, 1.0), (1, 2, 1.0)],
        )
        .unwrap();
        let d = net.shortest_path_lengths("a", false).unwrap();
        assert_eq!(d["a"], Some(0));
        assert_eq!(d["b"], Some(1));
        assert_eq!(d["c"], Some(2));
    }

    #[test]
    fn path_lengths_respect_direction() {
        let (net, _) =
            Network::from_index_edges(Layer::Trust, ids(&["a", "b"]), &[(0, 1, 1.0)]).unwrap();
        let d = net.shortest_path_lengths("b", true).unwrap();
        assert_eq!(d["b"], Some(0));
        assert_eq!(d["a"], None);
        let d = net.shortest_path_lengths("b", false).unwrap();
        assert_eq!(d["a"], Some(1));
    }

    #[test]
    fn path_lengths_on_five_cycle() {
        let (net, _) = Network::from_index_edges(
            Layer::Coauthorship,
            ids(&["a", "b", "c", "d", "e"]),
            &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0), (4, 0, 1.0)],
        )
        .unwrap();
        let mut hops: Vec<usize> = net
            .shortest_path_lengths("a", false)
            .unwrap()
            .values()
            .map(|d| d.unwrap())
            .collect();
        hops.sort_unstable();
        assert_eq!(hops, vec![0, 1, 1, 2, 2]);
    }

    #[test]
    fn undirected_view_sums_reciprocal_weights() {
        let (net, _) = Network::from_index_edges(
            Layer::Trust,
            ids(&["a", "b"]),
            &[(0, 1, 1.0), (1, 0, 1.0)],
        )
        .unwrap();
        let view = net.undirected_view();
        assert_eq!(view.edge_count(), 1);
        assert_eq!(view.edges()[0].weight, 2.0);
        assert!(!view.directed());
    }

    #[test]
    fn undirected_view_of_single_direction() {
        let (net, _) =
            Network::from_index_edges(Layer::Trust, ids(&["a", "b"]), &[(0, 1, 1.0)]).unwrap();
        let view = net.undirected_view();
        assert_eq!(view.edge_count(), 1);
        assert_eq!(view.edges()[0].weight, 1.0);
    }

    #[test]
    fn undirected_view_is_identity_on_undirected() {
        let net = triangle();
        let view = net.undirected_view();
        assert_eq!(view.edges(), net.edges());
    }

    #[test]
    fn components_of_two_triangles() {
        let (net, _) = Network::from_index_edges(
            Layer::Coauthorship,
            ids(&["a", "b", "c", "d", "e", "f"]),
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (0, 2, 1.0),
                (3, 4, 1.0),
                (4, 5, 1.0),
                (3, 5, 1.0),
            ],
        )
        .unwrap();
        let comps = net.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 3);
        assert_eq!(comps[1].len(), 3);
    }

    #[test]
    fn components_of_edgeless_graph() {
        let (net, _) =
            Network::from_index_edges(Layer::Coauthorship, ids(&["a", "b", "c"]), &[]).unwrap();
        let comps = net.connected_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn components_of_barbell() {
        // Two K5 cliques plus one bridge edge: one component of size 10.
        let mut raw = Vec::new();
        for base in [0usize, 5] {
            for i in 0..5 {
                for j in (i + 1)..5 {
                    raw.push((base + i, base + j, 1.0));
                }
            }
        }
        raw.push((4, 5, 1.0));
        let names: Vec<String> = (0..10).map(|i| format!("n{i}")).collect();
        let (net, _) = Network::from_index_edges(Layer::Coauthorship, names, &raw).unwrap();
        // Oracle: brute-force reachability from node 0.
        let reach = net.hop_distances(0, false);
        assert!(reach.iter().all(|d| d.is_some()));
        let comps = net.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 10);
    }

    #[test]
    fn self_loops_dropped_and_duplicates_collapsed() {
        let (net, notes) = Network::from_index_edges(
            Layer::Information,
            ids(&["a", "b"]),
            &[(0, 0, 1.0), (0, 1, 1.0), (0, 1, 1.0)],
        )
        .unwrap();
        assert_eq!(net.edge_count(), 1);
        assert_eq!(notes.self_loops_dropped, 1);
        assert_eq!(notes.duplicates_collapsed, 1);
    }

    #[test]
    fn coauthorship_duplicates_accumulate_weight() {
        let (net, notes) = Network::from_index_edges(
            Layer::Coauthorship,
            ids(&["a", "b"]),
            &[(0, 1, 1.0), (1, 0, 2.0)],
        )
        .unwrap();
        assert_eq!(net.edge_count(), 1);
        assert_eq!(net.edges()[0].weight, 3.0);
        assert_eq!(notes.duplicates_collapsed, 1);
    }

    #[test]
    fn directed_layers_force_unit_weights() {
        let (net, _) =
            Network::from_index_edges(Layer::Trust, ids(&["a", "b"]), &[(0, 1, 7.0)]).unwrap();
        assert_eq!(net.edges()[0].weight, 1.0);
    }

    #[test]
    fn location_validation() {
        assert!(Location::new(29.65, -82.32).is_ok());
        assert!(Location::new(91.0, 0.0).is_err());
        assert!(Location::new(0.0, -180.5).is_err());
        assert!(Location::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn education_parsing_is_strict() {
        assert_eq!(Education::parse("Masters"), Some(Education::Masters));
        assert_eq!(Education::parse(" high school "), Some(Education::HighSchool));
        assert_eq!(Education::parse("phd"), None);
        assert!(Education::Doctorate > Education::HighSchool);
    }

    #[test]
    fn roster_rejects_duplicate_ids() {
        let err = Roster::new(vec![Researcher::bare("x"), Researcher::bare("x")]).unwrap_err();
        assert!(matches!(err, Error::DuplicateId(id) if id == "x"));
    }
}
