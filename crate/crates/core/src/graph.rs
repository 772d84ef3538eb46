//! Temporal graph snapshots and node labels.
//!
//! A [`TemporalGraphSet`] holds T undirected simple snapshots over one node
//! universe (the union of every endpoint seen at any time). Node identifiers
//! are arbitrary strings mapped to dense indices; index order equals
//! lexicographic name order, so anything iterated by index is reproducible.
//! Time steps are 1-based: `t` ranges over `[1, T]`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// A (node, time step) pair: the vocabulary unit for walks and embeddings.
///
/// `node` is a dense index into the owning graph's universe; `t` is 1-based.
/// Rendered as `name@t` in every text format.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Token {
    pub node: u32,
    pub t: u32,
}

impl Token {
    pub fn new(node: u32, t: usize) -> Self {
        Token { node, t: t as u32 }
    }

    pub fn time(&self) -> usize {
        self.t as usize
    }
}

/// Split a serialized token back into `(node_name, t)`.
///
/// The separator is the last `@`, so node names containing `@` still parse.
pub fn parse_token_name(s: &str) -> Option<(&str, usize)> {
    let (name, t) = s.rsplit_once('@')?;
    let t: usize = t.parse().ok()?;
    if name.is_empty() || t == 0 {
        return None;
    }
    Some((name, t))
}

/// One undirected simple snapshot, adjacency stored as sorted neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    adjacency: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Snapshot {
    fn new(n: usize) -> Self {
        Snapshot {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor indices of `node`; empty if the node is inactive here.
    pub fn neighbors(&self, node: u32) -> &[u32] {
        &self.adjacency[node as usize]
    }

    pub fn degree(&self, node: u32) -> usize {
        self.adjacency[node as usize].len()
    }

    /// A node is active at a time step when it has at least one edge there.
    pub fn is_active(&self, node: u32) -> bool {
        !self.adjacency[node as usize].is_empty()
    }

    /// Indices of all active nodes, ascending.
    pub fn active_nodes(&self) -> impl Iterator<Item = u32> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .filter(|(_, adj)| !adj.is_empty())
            .map(|(i, _)| i as u32)
    }

    /// All edges as (u, v) index pairs with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, adj)| {
            adj.iter()
                .filter(move |&&v| (u as u32) < v)
                .map(move |&v| (u as u32, v))
        })
    }

    /// Insert an undirected edge given as index pair. Returns false for
    /// self-loops and duplicates, which are not stored.
    fn insert_edge(&mut self, u: u32, v: u32) -> EdgeInsert {
        if u == v {
            return EdgeInsert::SelfLoop;
        }
        match self.adjacency[u as usize].binary_search(&v) {
            Ok(_) => EdgeInsert::Duplicate,
            Err(pos) => {
                self.adjacency[u as usize].insert(pos, v);
                let pos = self.adjacency[v as usize].binary_search(&u).unwrap_err();
                self.adjacency[v as usize].insert(pos, u);
                self.edge_count += 1;
                EdgeInsert::Added
            }
        }
    }
}

enum EdgeInsert {
    Added,
    SelfLoop,
    Duplicate,
}

/// Counters for rows dropped while loading or building snapshots.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub self_loops_dropped: usize,
    pub duplicate_edges_dropped: usize,
}

/// An ordered sequence of snapshots over a shared node universe.
#[derive(Clone, Debug)]
pub struct TemporalGraphSet {
    names: Vec<String>,
    index: HashMap<String, u32>,
    snapshots: Vec<Snapshot>,
    time_labels: Vec<String>,
    time_index: HashMap<String, usize>,
}

impl TemporalGraphSet {
    /// Build from per-snapshot edge lists over string identifiers, plus any
    /// extra nodes that should exist in the universe without edges.
    pub fn from_edges(snapshots: &[&[(&str, &str)]], extra_nodes: &[&str]) -> Self {
        let mut universe: BTreeSet<String> = extra_nodes.iter().map(|s| s.to_string()).collect();
        for snap in snapshots {
            for (u, v) in snap.iter() {
                universe.insert(u.to_string());
                universe.insert(v.to_string());
            }
        }
        let names: Vec<String> = universe.into_iter().collect();
        let index: HashMap<String, u32> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();
        let mut snaps = Vec::with_capacity(snapshots.len());
        for snap in snapshots {
            let mut s = Snapshot::new(names.len());
            for (u, v) in snap.iter() {
                s.insert_edge(index[*u], index[*v]);
            }
            snaps.push(s);
        }
        let time_labels: Vec<String> = (1..=snaps.len()).map(|t| format!("t{t}")).collect();
        let time_index = time_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i + 1))
            .collect();
        TemporalGraphSet {
            names,
            index,
            snapshots: snaps,
            time_labels,
            time_index,
        }
    }

    /// Build from index-based edge lists over a fixed universe. Used by the
    /// synthetic generator; names must already be sorted.
    pub(crate) fn from_indexed(
        names: Vec<String>,
        snapshots: Vec<Vec<(u32, u32)>>,
        time_labels: Vec<String>,
    ) -> Self {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let index: HashMap<String, u32> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();
        let snaps = snapshots
            .into_iter()
            .map(|edges| {
                let mut s = Snapshot::new(names.len());
                for (u, v) in edges {
                    s.insert_edge(u, v);
                }
                s
            })
            .collect::<Vec<_>>();
        let time_index = time_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i + 1))
            .collect();
        TemporalGraphSet {
            names,
            index,
            snapshots: snaps,
            time_labels,
            time_index,
        }
    }

    /// Load snapshots from edge-list files, one file per time step in order.
    ///
    /// Each line holds two whitespace-separated node identifiers; `#` lines
    /// and blank lines are ignored. Self-loops and duplicate edges are
    /// dropped and counted in the returned [`LoadStats`].
    pub fn load_snapshots<P: AsRef<Path>>(paths: &[P]) -> Result<(Self, LoadStats)> {
        if paths.is_empty() {
            return Err(Error::InvalidInput("no snapshot files given".into()));
        }
        let mut parsed: Vec<Vec<(String, String)>> = Vec::with_capacity(paths.len());
        let mut universe: BTreeSet<String> = BTreeSet::new();
        for path in paths {
            let path = path.as_ref();
            let file = File::open(path).map_err(|e| Error::io(path, e))?;
            let mut edges = Vec::new();
            for (lineno, line) in BufReader::new(file).lines().enumerate() {
                let line = line.map_err(|e| Error::io(path, e))?;
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed.starts_with('#') {
                    continue;
                }
                let mut fields = trimmed.split_whitespace();
                let (u, v) = match (fields.next(), fields.next(), fields.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => {
                        return Err(Error::parse(
                            path,
                            lineno + 1,
                            format!("expected 'u v', got '{trimmed}'"),
                        ))
                    }
                };
                universe.insert(u.to_string());
                universe.insert(v.to_string());
                edges.push((u.to_string(), v.to_string()));
            }
            parsed.push(edges);
        }

        let names: Vec<String> = universe.into_iter().collect();
        let index: HashMap<String, u32> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i as u32))
            .collect();

        let mut stats = LoadStats::default();
        let mut snapshots = Vec::with_capacity(parsed.len());
        for edges in &parsed {
            let mut snap = Snapshot::new(names.len());
            for (u, v) in edges {
                match snap.insert_edge(index[u], index[v]) {
                    EdgeInsert::Added => {}
                    EdgeInsert::SelfLoop => stats.self_loops_dropped += 1,
                    EdgeInsert::Duplicate => stats.duplicate_edges_dropped += 1,
                }
            }
            snapshots.push(snap);
        }
        if stats.self_loops_dropped > 0 {
            log::warn!("dropped {} self-loop(s)", stats.self_loops_dropped);
        }
        if stats.duplicate_edges_dropped > 0 {
            log::warn!(
                "dropped {} duplicate edge(s)",
                stats.duplicate_edges_dropped
            );
        }

        let time_labels: Vec<String> = paths
            .iter()
            .map(|p| {
                p.as_ref()
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| p.as_ref().to_string_lossy().into_owned())
            })
            .collect();
        let time_index = time_labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i + 1))
            .collect();

        Ok((
            TemporalGraphSet {
                names,
                index,
                snapshots,
                time_labels,
                time_index,
            },
            stats,
        ))
    }

    /// Load via a manifest file listing one snapshot path per line, in time
    /// order. Relative paths resolve against the manifest's directory.
    pub fn load_manifest(manifest: &Path) -> Result<(Self, LoadStats)> {
        let base = manifest.parent().unwrap_or_else(|| Path::new("."));
        let file = File::open(manifest).map_err(|e| Error::io(manifest, e))?;
        let mut paths: Vec<PathBuf> = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| Error::io(manifest, e))?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let p = PathBuf::from(trimmed);
            paths.push(if p.is_absolute() { p } else { base.join(p) });
        }
        Self::load_snapshots(&paths)
    }

    /// Write one edge-list file per snapshot plus a `manifest.txt` into `dir`.
    /// Loading the manifest back reproduces identical adjacency.
    pub fn save(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let width = self.snapshots.len().to_string().len();
        let mut manifest_lines = Vec::new();
        for (i, snap) in self.snapshots.iter().enumerate() {
            let fname = format!("t{:0width$}.edges", i + 1);
            let path = dir.join(&fname);
            let mut w = BufWriter::new(File::create(&path).map_err(|e| Error::io(&path, e))?);
            for (u, v) in snap.edges() {
                writeln!(w, "{} {}", self.names[u as usize], self.names[v as usize])
                    .map_err(|e| Error::io(&path, e))?;
            }
            w.flush().map_err(|e| Error::io(&path, e))?;
            manifest_lines.push(fname);
        }
        let manifest = dir.join("manifest.txt");
        let mut w = BufWriter::new(File::create(&manifest).map_err(|e| Error::io(&manifest, e))?);
        for line in &manifest_lines {
            writeln!(w, "{line}").map_err(|e| Error::io(&manifest, e))?;
        }
        w.flush().map_err(|e| Error::io(&manifest, e))?;
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    /// Number of time steps T.
    pub fn time_steps(&self) -> usize {
        self.snapshots.len()
    }

    pub fn node_names(&self) -> &[String] {
        &self.names
    }

    pub fn node_name(&self, node: u32) -> &str {
        &self.names[node as usize]
    }

    pub fn node_index(&self, name: &str) -> Result<u32> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownNode(name.to_string()))
    }

    /// Snapshot at 1-based time step `t`.
    pub fn snapshot(&self, t: usize) -> Result<&Snapshot> {
        self.check_time(t)?;
        Ok(&self.snapshots[t - 1])
    }

    pub(crate) fn check_time(&self, t: usize) -> Result<()> {
        if t == 0 || t > self.snapshots.len() {
            return Err(Error::TimeOutOfRange {
                t,
                max: self.snapshots.len(),
            });
        }
        Ok(())
    }

    /// Sorted neighbor names of `node` at time step `t`.
    pub fn neighbors(&self, node: &str, t: usize) -> Result<Vec<&str>> {
        let idx = self.node_index(node)?;
        let snap = self.snapshot(t)?;
        Ok(snap
            .neighbors(idx)
            .iter()
            .map(|&v| self.names[v as usize].as_str())
            .collect())
    }

    pub fn token_name(&self, tok: Token) -> String {
        format!("{}@{}", self.names[tok.node as usize], tok.t)
    }

    /// External timestamp label of step `t` (e.g. a file stem like "2002-03").
    pub fn time_label(&self, t: usize) -> &str {
        &self.time_labels[t - 1]
    }

    /// 1-based time step for an external timestamp label.
    pub fn time_step_of(&self, label: &str) -> Option<usize> {
        self.time_index.get(label).copied()
    }
}

impl fmt::Display for TemporalGraphSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "temporal graph: {} nodes, {} snapshots, {} edges total",
            self.names.len(),
            self.snapshots.len(),
            self.snapshots.iter().map(|s| s.edge_count).sum::<usize>()
        )
    }
}

/// Categorical node labels per (node, time step).
#[derive(Clone, Debug, Default)]
pub struct NodeLabelTable {
    labels: HashMap<(u32, u32), String>,
    label_set: BTreeSet<String>,
}

/// Counter for label rows overwritten by a later conflicting row.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LabelLoadStats {
    pub conflicting_overwrites: usize,
}

impl NodeLabelTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Load from lines of `t node label`. Later rows win on duplicate
    /// (t, node) keys; conflicts are counted and warned about.
    pub fn load(path: &Path, graph: &TemporalGraphSet) -> Result<(Self, LabelLoadStats)> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        let mut table = NodeLabelTable::new();
        let mut stats = LabelLoadStats::default();
        for (lineno, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = trimmed.split_whitespace();
            let (t, node, label) = match (fields.next(), fields.next(), fields.next(), fields.next())
            {
                (Some(t), Some(node), Some(label), None) => (t, node, label),
                _ => {
                    return Err(Error::parse(
                        path,
                        lineno + 1,
                        format!("expected 't node label', got '{trimmed}'"),
                    ))
                }
            };
            let t: usize = t
                .parse()
                .map_err(|_| Error::parse(path, lineno + 1, format!("bad time step '{t}'")))?;
            if graph.check_time(t).is_err() {
                return Err(Error::parse(
                    path,
                    lineno + 1,
                    format!("time step {t} outside [1, {}]", graph.time_steps()),
                ));
            }
            let node = graph
                .node_index(node)
                .map_err(|_| Error::parse(path, lineno + 1, format!("unknown node '{node}'")))?;
            if let Some(old) = table.insert(node, t, label) {
                if old != label {
                    stats.conflicting_overwrites += 1;
                }
            }
        }
        if stats.conflicting_overwrites > 0 {
            log::warn!(
                "{}: {} conflicting label row(s) overwritten (last write wins)",
                path.display(),
                stats.conflicting_overwrites
            );
        }
        Ok((table, stats))
    }

    /// Insert a label; returns the previous label for the key if any.
    pub fn insert(&mut self, node: u32, t: usize, label: &str) -> Option<String> {
        self.label_set.insert(label.to_string());
        self.labels.insert((node, t as u32), label.to_string())
    }

    pub fn get(&self, node: u32, t: usize) -> Option<&str> {
        self.labels.get(&(node, t as u32)).map(|s| s.as_str())
    }

    /// Labels of `node` over `[t_lo, t_hi]`, in time order, labeled steps only.
    pub fn labels_in_window(&self, node: u32, t_lo: usize, t_hi: usize) -> Vec<&str> {
        (t_lo..=t_hi).filter_map(|t| self.get(node, t)).collect()
    }

    pub fn label_set(&self) -> &BTreeSet<String> {
        &self.label_set
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Write as `t node label` lines sorted by (t, node index).
    pub fn save(&self, path: &Path, graph: &TemporalGraphSet) -> Result<()> {
        let mut rows: Vec<(&(u32, u32), &String)> = self.labels.iter().collect();
        rows.sort_by_key(|((node, t), _)| (*t, *node));
        let mut w = BufWriter::new(File::create(path).map_err(|e| Error::io(path, e))?);
        for ((node, t), label) in rows {
            writeln!(w, "{} {} {}", t, graph.node_name(*node), label)
                .map_err(|e| Error::io(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    fn write_file(dir: &Path, name: &str, contents: &str) -> PathBuf {
        let path = dir.join(name);
        let mut f = File::create(&path).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        path
    }

    #[test]
    fn load_two_snapshots() {
        let dir = tempfile::tempdir().unwrap();
        let p1 = write_file(dir.path(), "t1.edges", "a b\n");
        let p2 = write_file(dir.path(), "t2.edges", "b c\n");
        let (g, stats) = TemporalGraphSet::load_snapshots(&[p1, p2]).unwrap();
        assert_eq!(g.time_steps(), 2);
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.neighbors("a", 1).unwrap(), vec!["b"]);
        assert_eq!(g.neighbors("b", 2).unwrap(), vec!["c"]);
        assert_eq!(g.neighbors("c", 1).unwrap(), Vec::<&str>::new());
        assert_eq!(stats, LoadStats::default());
    }

    #[test]
    fn self_loop_dropped_with_count() {
        let dir = tempfile::tempdir().unwrap();
        let p = write_file(dir.path(), "t1.edges", "a a\n");
        let (g, stats) = TemporalGraphSet::load_snapshots(&[p]).unwrap();
        assert_eq!(g.snapshot(1).unwrap().edge_count(), 0);
        assert_eq!(stats.self_loops_dropped, 1);
    }

    #[test]
    fn reversed_duplicate_collapses_to_one_edge() {
        let dir = tempfile::tempdir().unwrap();
        let p = write_file(dir.path(), "t1.edges", "a b\nb a\n");
        let (g, stats) = TemporalGraphSet::load_snapshots(&[p]).unwrap();
        assert_eq!(g.snapshot(1).unwrap().edge_count(), 1);
        assert_eq!(stats.duplicate_edges_dropped, 1);
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let p = write_file(dir.path(), "t1.edges", "# header\n\na b\n");
        let (g, _) = TemporalGraphSet::load_snapshots(&[p]).unwrap();
        assert_eq!(g.snapshot(1).unwrap().edge_count(), 1);
    }

    #[test]
    fn malformed_line_names_file_and_line() {
        let dir = tempfile::tempdir().unwrap();
        let p = write_file(dir.path(), "t1.edges", "a b\na b c\n");
        let err = TemporalGraphSet::load_snapshots(&[p]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("t1.edges"), "{msg}");
        assert!(msg.contains(":2"), "{msg}");
    }

    #[test]
    fn missing_file_is_fatal_and_names_path() {
        let err = TemporalGraphSet::load_snapshots(&[Path::new("/nonexistent/x.edges")])
            .unwrap_err();
        assert!(err.to_string().contains("/nonexistent/x.edges"));
    }

    #[test]
    fn neighbors_on_path_graph() {
        let g = TemporalGraphSet::from_edges(&[&[("a", "b"), ("b", "c")]], &[]);
        assert_eq!(g.neighbors("b", 1).unwrap(), vec!["a", "c"]);
    }

    #[test]
    fn neighbors_of_isolated_node_is_empty() {
        let g = TemporalGraphSet::from_edges(&[&[("a", "b")]], &["d"]);
        assert_eq!(g.neighbors("d", 1).unwrap(), Vec::<&str>::new());
    }

    #[test]
    fn star_neighbors_sorted() {
        let g = TemporalGraphSet::from_edges(&[&[("c", "z"), ("c", "x"), ("c", "y")]], &[]);
        assert_eq!(g.neighbors("c", 1).unwrap(), vec!["x", "y", "z"]);
    }

    #[test]
    fn neighbors_rejects_unknown_node_and_bad_time() {
        let g = TemporalGraphSet::from_edges(&[&[("a", "b")]], &[]);
        assert!(matches!(
            g.neighbors("zz", 1),
            Err(Error::UnknownNode(_))
        ));
        assert!(matches!(
            g.neighbors("a", 2),
            Err(Error::TimeOutOfRange { t: 2, max: 1 })
        ));
        assert!(matches!(
            g.neighbors("a", 0),
            Err(Error::TimeOutOfRange { t: 0, max: 1 })
        ));
    }

    #[test]
    fn labels_load_basic() {
        let g = TemporalGraphSet::from_edges(&[&[("a", "b")]], &[]);
        let dir = tempfile::tempdir().unwrap();
        let p = write_file(dir.path(), "labels.txt", "1 a DB\n");
        let (table, stats) = NodeLabelTable::load(&p, &g).unwrap();
        let a = g.node_index("a").unwrap();
        assert_eq!(table.get(a, 1), Some("DB"));
        assert_eq!(table.label_set().len(), 1);
        assert_eq!(stats.conflicting_overwrites, 0);
    }

    #[test]
    fn labels_last_write_wins_with_warning_count() {
        let g = TemporalGraphSet::from_edges(&[&[("a", "b")]], &[]);
        let dir = tempfile::tempdir().unwrap();
        let p = write_file(dir.path(), "labels.txt", "1 a DB\n1 a AI\n");
        let (table, stats) = NodeLabelTable::load(&p, &g).unwrap();
        let a = g.node_index("a").unwrap();
        assert_eq!(table.get(a, 1), Some("AI"));
        assert_eq!(stats.conflicting_overwrites, 1);
    }

    #[test]
    fn labels_empty_file() {
        let g = TemporalGraphSet::from_edges(&[&[("a", "b")]], &[]);
        let dir = tempfile::tempdir().unwrap();
        let p = write_file(dir.path(), "labels.txt", "");
        let (table, _) = NodeLabelTable::load(&p, &g).unwrap();
        assert!(table.is_empty());
        assert!(table.label_set().is_empty());
    }

    #[test]
    fn labels_time_out_of_range_names_line() {
        let g = TemporalGraphSet::from_edges(&[&[("a", "b")]], &[]);
        let dir = tempfile::tempdir().unwrap();
        let p = write_file(dir.path(), "labels.txt", "1 a DB\n7 a DB\n");
        let err = NodeLabelTable::load(&p, &g).unwrap_err();
        assert!(err.to_string().contains(":2"), "{err}");
    }

    #[test]
    fn no_node_is_its_own_neighbor_and_adjacency_is_symmetric() {
        let g = TemporalGraphSet::from_edges(
            &[&[("a", "b"), ("b", "c"), ("c", "a")], &[("a", "c")]],
            &[],
        );
        for t in 1..=g.time_steps() {
            let snap = g.snapshot(t).unwrap();
            for u in 0..g.node_count() as u32 {
                assert!(!snap.neighbors(u).contains(&u));
                for &v in snap.neighbors(u) {
                    assert!(snap.neighbors(v).contains(&u));
                }
            }
        }
    }

    #[test]
    fn save_load_round_trip_preserves_adjacency() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n = rng.random_range(2..8usize);
            let t_count = rng.random_range(1..4usize);
            let names: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
            let mut snaps: Vec<Vec<(&str, &str)>> = Vec::new();
            for _ in 0..t_count {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.random_bool(0.4) {
                            edges.push((names[u].as_str(), names[v].as_str()));
                        }
                    }
                }
                snaps.push(edges);
            }
            let snap_refs: Vec<&[(&str, &str)]> = snaps.iter().map(|s| s.as_slice()).collect();
            let g = TemporalGraphSet::from_edges(&snap_refs, &[]);

            let dir = tempfile::tempdir().unwrap();
            g.save(dir.path()).unwrap();
            let (g2, _) = TemporalGraphSet::load_manifest(&dir.path().join("manifest.txt")).unwrap();

            assert_eq!(g.node_names(), g2.node_names());
            assert_eq!(g.time_steps(), g2.time_steps());
            for t in 1..=g.time_steps() {
                assert_eq!(g.snapshot(t).unwrap(), g2.snapshot(t).unwrap());
            }
        }
    }

    #[test]
    fn token_name_round_trip() {
        let g = TemporalGraphSet::from_edges(&[&[("alice", "bob")]], &[]);
        let tok = Token::new(g.node_index("alice").unwrap(), 1);
        let s = g.token_name(tok);
        assert_eq!(s, "alice@1");
        assert_eq!(parse_token_name(&s), Some(("alice", 1)));
        assert_eq!(parse_token_name("we@ird@3"), Some(("we@ird", 3)));
        assert_eq!(parse_token_name("noat"), None);
    }

    #[test]
    fn time_labels_track_file_stems() {
        let dir = tempfile::tempdir().unwrap();
        let p1 = write_file(dir.path(), "2002-03.edges", "a b\n");
        let p2 = write_file(dir.path(), "2002-04.edges", "a b\n");
        let (g, _) = TemporalGraphSet::load_snapshots(&[p1, p2]).unwrap();
        assert_eq!(g.time_label(1), "2002-03");
        assert_eq!(g.time_step_of("2002-04"), Some(2));
    }
}
