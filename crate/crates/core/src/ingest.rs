//! Input parsing and graph preprocessing.
//!
//! Three text formats: whitespace edge lists (`u v [weight]`), DIMACS clique
//! files (`p edge n m` / `e u v`, 1-based), and temporal edge lists
//! (`u v t`). Labels are arbitrary tokens, densely renumbered by first
//! appearance. Preprocessing drops weights and self-loops, restricts to the
//! largest (strongly) connected component, and for directed graphs keeps
//! only reciprocated pairs as undirected edges.

use std::collections::HashMap;
use std::io::Read;
use std::path::Path;

use thiserror::Error;

use crate::graph::StaticGraph;
use crate::temporal::TemporalNetwork;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("missing DIMACS problem line (`p edge <n> <m>`)")]
    MissingHeader,
    #[error("line {line}: vertex id {id} out of range 1..={n}")]
    IdOutOfRange { line: usize, id: i64, n: usize },
    #[error("vertex count {0} overflows the index width")]
    TooManyVertices(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn malformed(line: usize, reason: impl Into<String>) -> IngestError {
    IngestError::Malformed {
        line,
        reason: reason.into(),
    }
}

/// Edge list with arbitrary labels mapped onto dense ids.
#[derive(Debug, Clone)]
pub struct RawEdgeList {
    pub directed: bool,
    pub vertex_count: usize,
    /// Dense-id pairs in input order; may contain self-loops and duplicates
    /// (preprocessing cleans them up).
    pub edges: Vec<(u32, u32)>,
    /// Dense id -> original token.
    pub labels: Vec<String>,
    pub warnings: Vec<String>,
}

struct LabelMap {
    ids: HashMap<String, u32>,
    labels: Vec<String>,
}

impl LabelMap {
    fn new() -> LabelMap {
        LabelMap {
            ids: HashMap::new(),
            labels: Vec::new(),
        }
    }

    fn intern(&mut self, token: &str) -> u32 {
        if let Some(&id) = self.ids.get(token) {
            return id;
        }
        let id = self.labels.len() as u32;
        self.ids.insert(token.to_string(), id);
        self.labels.push(token.to_string());
        id
    }
}

fn is_comment(line: &str) -> bool {
    matches!(line.as_bytes().first(), Some(b'#') | Some(b'%'))
}

/// Parses `u v [weight]` lines; `#`/`%` start comments, weights are
/// discarded. `directed` records how the caller wants the edges interpreted.
pub fn parse_edge_list(bytes: &[u8], directed: bool) -> Result<RawEdgeList, IngestError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| malformed(0, format!("input is not UTF-8: {e}")))?;
    let mut labels = LabelMap::new();
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = line.trim();
        if line.is_empty() || is_comment(line) {
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next()) {
            (Some(u), Some(v)) => (u, v),
            _ => return Err(malformed(line_no, format!("expected `u v [weight]`, got `{line}`"))),
        };
        let _weight = it.next(); // discarded
        if it.next().is_some() {
            return Err(malformed(line_no, format!("too many fields in `{line}`")));
        }
        let u = labels.intern(u);
        let v = labels.intern(v);
        edges.push((u, v));
    }
    Ok(RawEdgeList {
        directed,
        vertex_count: labels.labels.len(),
        edges,
        labels: labels.labels,
        warnings: Vec::new(),
    })
}

/// Parses DIMACS clique format: `c` comments, one `p edge <n> <m>` problem
/// line, `e <u> <v>` edges with 1-based ids. Unknown line types are skipped
/// with a warning; an edge-count mismatch also warns rather than fails.
pub fn parse_dimacs(bytes: &[u8]) -> Result<RawEdgeList, IngestError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| malformed(0, format!("input is not UTF-8: {e}")))?;
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges = Vec::new();
    let mut warnings = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if n.is_some() {
                return Err(malformed(line_no, "second `p` line"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            // `p edge n m` (format token occasionally varies, e.g. `col`).
            if fields.len() != 3 {
                return Err(malformed(line_no, format!("bad problem line `{line}`")));
            }
            let nv: usize = fields[1]
                .parse()
                .map_err(|_| malformed(line_no, format!("bad vertex count `{}`", fields[1])))?;
            declared_m = fields[2]
                .parse()
                .map_err(|_| malformed(line_no, format!("bad edge count `{}`", fields[2])))?;
            n = Some(nv);
            continue;
        }
        if let Some(rest) = line.strip_prefix('e') {
            let n = n.ok_or(IngestError::MissingHeader)?;
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(malformed(line_no, format!("bad edge line `{line}`")));
            }
            let mut pair = [0u32; 2];
            for (slot, f) in pair.iter_mut().zip(&fields) {
                let id: i64 = f
                    .parse()
                    .map_err(|_| malformed(line_no, format!("bad vertex id `{f}`")))?;
                if id < 1 || id as usize > n {
                    return Err(IngestError::IdOutOfRange { line: line_no, id, n });
                }
                *slot = (id - 1) as u32;
            }
            edges.push((pair[0], pair[1]));
            continue;
        }
        warnings.push(format!("line {line_no}: skipping unrecognized line `{line}`"));
    }
    let n = n.ok_or(IngestError::MissingHeader)?;
    if edges.len() != declared_m {
        warnings.push(format!(
            "edge count mismatch: problem line declares {declared_m}, found {}",
            edges.len()
        ));
    }
    Ok(RawEdgeList {
        directed: false,
        vertex_count: n,
        edges,
        labels: (1..=n).map(|i| i.to_string()).collect(),
        warnings,
    })
}

/// Parsed temporal edge list plus its label table.
#[derive(Debug)]
pub struct ParsedTemporal {
    pub network: TemporalNetwork,
    pub labels: Vec<String>,
    pub warnings: Vec<String>,
}

/// Parses `u v t` lines (t real-valued). Self-loops are dropped; repeated
/// contacts are kept.
pub fn parse_temporal(bytes: &[u8]) -> Result<ParsedTemporal, IngestError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| malformed(0, format!("input is not UTF-8: {e}")))?;
    let mut labels = LabelMap::new();
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = line.trim();
        if line.is_empty() || is_comment(line) {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(malformed(line_no, format!("expected `u v t`, got `{line}`")));
        }
        let t: f64 = fields[2]
            .parse()
            .map_err(|_| malformed(line_no, format!("bad timestamp `{}`", fields[2])))?;
        if !t.is_finite() {
            return Err(malformed(line_no, format!("non-finite timestamp `{}`", fields[2])));
        }
        let u = labels.intern(fields[0]);
        let v = labels.intern(fields[1]);
        edges.push((u, v, t));
    }
    let n = labels.labels.len();
    let (network, dropped) = TemporalNetwork::new(n, edges);
    let mut warnings = Vec::new();
    if dropped > 0 {
        warnings.push(format!("dropped {dropped} self-loop(s)"));
    }
    Ok(ParsedTemporal {
        network,
        labels: labels.labels,
        warnings,
    })
}

/// Reads a file, transparently inflating gzip (by `.gz` extension or magic).
pub fn read_input(path: &Path) -> Result<Vec<u8>, IngestError> {
    let raw = std::fs::read(path)?;
    let by_extension = path.extension().is_some_and(|e| e == "gz");
    let by_magic = raw.starts_with(&[0x1f, 0x8b]);
    if by_extension || by_magic {
        let mut out = Vec::new();
        flate2::read::GzDecoder::new(raw.as_slice()).read_to_end(&mut out)?;
        Ok(out)
    } else {
        Ok(raw)
    }
}

/// Preprocessed graph ready for the solver, with labels carried along.
#[derive(Debug)]
pub struct PreprocessedGraph {
    pub graph: StaticGraph,
    /// Graph id -> original input label.
    pub labels: Vec<String>,
    pub original_vertices: usize,
    pub original_edges: usize,
    pub warnings: Vec<String>,
}

/// Drops weights and self-loops, then restricts to the largest strongly
/// connected component and keeps only reciprocated pairs (directed input),
/// or restricts to the largest connected component (undirected input).
pub fn preprocess(raw: &RawEdgeList) -> PreprocessedGraph {
    let n = raw.vertex_count;
    let mut warnings = raw.warnings.clone();
    let clean: Vec<(u32, u32)> = raw.edges.iter().copied().filter(|&(u, v)| u != v).collect();

    let (members, undirected_edges) = if raw.directed {
        let scc = largest_scc(n, &clean);
        let mut in_scc = vec![false; n];
        for &v in &scc {
            in_scc[v as usize] = true;
        }
        let mut arcs: std::collections::HashSet<(u32, u32)> = std::collections::HashSet::new();
        for &(u, v) in &clean {
            if in_scc[u as usize] && in_scc[v as usize] {
                arcs.insert((u, v));
            }
        }
        let mut mutual: Vec<(u32, u32)> = arcs
            .iter()
            .filter(|&&(u, v)| u < v && arcs.contains(&(v, u)))
            .copied()
            .collect();
        mutual.sort_unstable();
        // Vertices with no reciprocated partner cannot join any clique of
        // size ≥ 2; dropping them keeps the reported graph meaningful.
        let mut touched = vec![false; n];
        for &(u, v) in &mutual {
            touched[u as usize] = true;
            touched[v as usize] = true;
        }
        let members: Vec<u32> = (0..n as u32).filter(|&v| touched[v as usize]).collect();
        if mutual.is_empty() && !clean.is_empty() {
            warnings.push(
                "directed input has no reciprocated edges inside its largest strong component; \
                 the preprocessed graph is empty"
                    .to_string(),
            );
        }
        (members, mutual)
    } else {
        let comp = largest_connected_component(n, &clean);
        let mut in_comp = vec![false; n];
        for &v in &comp {
            in_comp[v as usize] = true;
        }
        let mut sym: Vec<(u32, u32)> = clean
            .iter()
            .filter(|&&(u, v)| in_comp[u as usize] && in_comp[v as usize])
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        sym.sort_unstable();
        sym.dedup();
        (comp, sym)
    };

    // Dense renumbering, ascending in the old ids.
    let mut new_id = vec![u32::MAX; n];
    for (i, &v) in members.iter().enumerate() {
        new_id[v as usize] = i as u32;
    }
    let remapped: Vec<(u64, u64)> = undirected_edges
        .iter()
        .map(|&(u, v)| (new_id[u as usize] as u64, new_id[v as usize] as u64))
        .collect();
    let graph = StaticGraph::with_vertices(members.len(), &remapped)
        .expect("remapped ids are dense");
    let labels = members
        .iter()
        .map(|&v| raw.labels.get(v as usize).cloned().unwrap_or_else(|| v.to_string()))
        .collect();
    PreprocessedGraph {
        graph,
        labels,
        original_vertices: n,
        original_edges: raw.edges.len(),
        warnings,
    }
}

/// Largest connected component of the undirected view; ties resolved toward
/// the component containing the smallest vertex id. Singleton components
/// count.
fn largest_connected_component(n: usize, edges: &[(u32, u32)]) -> Vec<u32> {
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let mut comp = vec![u32::MAX; n];
    let mut best: Vec<u32> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n as u32 {
        if comp[root as usize] != u32::MAX {
            continue;
        }
        comp[root as usize] = root;
        queue.push_back(root);
        let mut members = vec![root];
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v as usize] {
                if comp[w as usize] == u32::MAX {
                    comp[w as usize] = root;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        if members.len() > best.len() {
            members.sort_unstable();
            best = members;
        }
    }
    best
}

/// Largest strongly connected component (iterative Tarjan); ties resolved
/// toward the component containing the smallest vertex id.
fn largest_scc(n: usize, edges: &[(u32, u32)]) -> Vec<u32> {
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v);
    }
    const UNVISITED: u32 = u32::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut counter = 0u32;
    let mut best: Vec<u32> = Vec::new();
    let mut best_key = (0usize, u32::MAX); // (size, Reverse-ish min id)

    let mut work: Vec<(u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != UNVISITED {
            continue;
        }
        index[root as usize] = counter;
        low[root as usize] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        work.push((root, 0));
        while let Some(&mut (v, ref mut next)) = work.last_mut() {
            if *next < adj[v as usize].len() {
                let w = adj[v as usize][*next];
                *next += 1;
                if index[w as usize] == UNVISITED {
                    index[w as usize] = counter;
                    low[w as usize] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    work.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
            } else {
                work.pop();
                if let Some(&(parent, _)) = work.last() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.sort_unstable();
                    let key = (members.len(), u32::MAX - members[0]);
                    if key > best_key {
                        best_key = key;
                        best = members;
                    }
                }
            }
        }
    }
    best
}

/// Writes a graph back out as an edge list using its label table.
/// Round-trips through [`parse_edge_list`] + [`preprocess`].
pub fn write_edge_list(graph: &StaticGraph, labels: &[String]) -> String {
    let mut out = String::new();
    for (u, v) in graph.edges() {
        out.push_str(&labels[u as usize]);
        out.push(' ');
        out.push_str(&labels[v as usize]);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use maxclique_oracle::gen;
    use std::collections::BTreeSet;

    #[test]
    fn edge_list_basics() {
        let raw = parse_edge_list(b"0 1\n1 2\n", false).unwrap();
        assert_eq!(raw.vertex_count, 3);
        assert_eq!(raw.edges.len(), 2);
        assert_eq!(raw.labels, vec!["0", "1", "2"]);
    }

    #[test]
    fn comments_and_weights() {
        let raw = parse_edge_list(b"# c\na b 3.5\n", false).unwrap();
        assert_eq!(raw.edges.len(), 1);
        assert_eq!(raw.labels, vec!["a", "b"]);
    }

    #[test]
    fn malformed_lines_name_their_line_number() {
        let err = parse_edge_list(b"0 1\nbroken\n", false).unwrap_err();
        assert!(matches!(err, IngestError::Malformed { line: 2, .. }), "{err}");
        let err = parse_edge_list(b"a b c d\n", false).unwrap_err();
        assert!(matches!(err, IngestError::Malformed { line: 1, .. }));
    }

    #[test]
    fn parser_is_deterministic() {
        let bytes = b"x y\ny z\nz x\n";
        let a = parse_edge_list(bytes, false).unwrap();
        let b = parse_edge_list(bytes, false).unwrap();
        assert_eq!(a.labels, b.labels);
        assert_eq!(a.edges, b.edges);
    }

    #[test]
    fn edge_list_round_trip() {
        for seed in 0..10 {
            let edges = gen::gnp(15, 0.3, seed);
            let text: String = edges
                .iter()
                .map(|(u, v)| format!("v{u} v{v}\n"))
                .collect();
            let raw = parse_edge_list(text.as_bytes(), false).unwrap();
            let pre = preprocess(&raw);
            let text2 = write_edge_list(&pre.graph, &pre.labels);
            let raw2 = parse_edge_list(text2.as_bytes(), false).unwrap();
            let pre2 = preprocess(&raw2);
            // Same edge set through labels.
            let set = |g: &StaticGraph, labels: &[String]| -> BTreeSet<(String, String)> {
                g.edges()
                    .map(|(u, v)| {
                        let (a, b) = (labels[u as usize].clone(), labels[v as usize].clone());
                        (a.clone().min(b.clone()), a.max(b))
                    })
                    .collect()
            };
            assert_eq!(set(&pre.graph, &pre.labels), set(&pre2.graph, &pre2.labels));
        }
    }

    #[test]
    fn dimacs_k3() {
        let raw = parse_dimacs(b"p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(raw.vertex_count, 3);
        assert_eq!(raw.edges.len(), 3);
        let pre = preprocess(&raw);
        assert_eq!(pre.graph.vertex_count(), 3);
        assert_eq!(pre.graph.edge_count(), 3);
        assert_eq!(pre.labels, vec!["1", "2", "3"]);
    }

    #[test]
    fn dimacs_duplicate_edges_collapse() {
        let raw = parse_dimacs(b"p edge 2 2\ne 1 2\ne 1 2\n").unwrap();
        let pre = preprocess(&raw);
        assert_eq!(pre.graph.edge_count(), 1);
    }

    #[test]
    fn dimacs_errors_and_warnings() {
        assert!(matches!(parse_dimacs(b"e 1 2\n"), Err(IngestError::MissingHeader)));
        assert!(matches!(
            parse_dimacs(b"p edge 2 1\ne 1 5\n"),
            Err(IngestError::IdOutOfRange { id: 5, .. })
        ));
        let raw = parse_dimacs(b"p edge 3 5\ne 1 2\n").unwrap();
        assert!(raw.warnings.iter().any(|w| w.contains("mismatch")));
    }

    #[test]
    fn temporal_basics() {
        let parsed = parse_temporal(b"a b 1\nb c 2\n").unwrap();
        assert_eq!(parsed.network.vertex_count(), 3);
        assert_eq!(parsed.network.edge_count(), 2);
        let parsed = parse_temporal(b"a a 5\n").unwrap();
        assert_eq!(parsed.network.edge_count(), 0);
        assert!(parsed.warnings[0].contains("self-loop"));
        assert!(parse_temporal(b"a b notatime\n").is_err());
        assert!(parse_temporal(b"a b nan\n").is_err());
    }

    #[test]
    fn temporal_shuffle_invariance() {
        // Distinct timestamps: the time-sorted, label-resolved sequence is
        // independent of line order.
        let lines = ["a b 3", "b c 1", "c a 2", "a c 5"];
        let canonical = |text: &str| -> Vec<(String, String, u64)> {
            let parsed = parse_temporal(text.as_bytes()).unwrap();
            let mut seq: Vec<(String, String, u64)> = parsed
                .network
                .edges()
                .iter()
                .map(|e| {
                    (
                        parsed.labels[e.u as usize].clone(),
                        parsed.labels[e.v as usize].clone(),
                        e.t.to_bits(),
                    )
                })
                .collect();
            seq.sort_by_key(|(_, _, t)| *t);
            seq
        };
        let base = canonical(&lines.join("\n"));
        let shuffled = canonical(&[lines[2], lines[0], lines[3], lines[1]].join("\n"));
        assert_eq!(base, shuffled);
    }

    #[test]
    fn directed_cycle_has_no_reciprocal_edges() {
        let raw = parse_edge_list(b"a b\nb c\nc a\n", true).unwrap();
        let pre = preprocess(&raw);
        assert_eq!(pre.graph.vertex_count(), 0);
        assert!(pre.warnings.iter().any(|w| w.contains("no reciprocated")));
    }

    #[test]
    fn mutual_arcs_become_a_path() {
        let raw = parse_edge_list(b"a b\nb a\nb c\nc b\n", true).unwrap();
        let pre = preprocess(&raw);
        assert_eq!(pre.graph.vertex_count(), 3);
        assert_eq!(pre.graph.edge_count(), 2);
        assert_eq!(pre.labels, vec!["a", "b", "c"]);
        assert!(pre.graph.has_edge(0, 1) && pre.graph.has_edge(1, 2));
        assert!(!pre.graph.has_edge(0, 2));
    }

    #[test]
    fn undirected_keeps_largest_component() {
        // Triangle plus a separate edge: the triangle wins.
        let raw = parse_edge_list(b"a b\nb c\nc a\nx y\n", false).unwrap();
        let pre = preprocess(&raw);
        assert_eq!(pre.graph.vertex_count(), 3);
        assert_eq!(pre.labels, vec!["a", "b", "c"]);
    }

    #[test]
    fn self_loops_and_weights_are_stripped() {
        let raw = parse_edge_list(b"a a 9\na b 2\n", false).unwrap();
        let pre = preprocess(&raw);
        assert_eq!(pre.graph.vertex_count(), 2);
        assert_eq!(pre.graph.edge_count(), 1);
    }

    // Definition-level SCC oracle: mutual BFS reachability.
    fn scc_oracle(n: usize, edges: &[(u32, u32)]) -> Vec<u32> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u as usize].push(v as usize);
        }
        let reach_from = |s: usize| -> Vec<bool> {
            let mut seen = vec![false; n];
            let mut q = std::collections::VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = q.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
            seen
        };
        let reach: Vec<Vec<bool>> = (0..n).map(reach_from).collect();
        let mut best: Vec<u32> = Vec::new();
        let mut assigned = vec![false; n];
        for v in 0..n {
            if assigned[v] {
                continue;
            }
            let members: Vec<u32> = (0..n)
                .filter(|&u| reach[v][u] && reach[u][v])
                .map(|u| u as u32)
                .collect();
            for &m in &members {
                assigned[m as usize] = true;
            }
            if members.len() > best.len() {
                best = members;
            }
        }
        best
    }

    #[test]
    fn directed_preprocess_matches_definition_oracle() {
        for seed in 0..25 {
            let n = 12;
            let mut rng = gen::SplitMix64::new(seed);
            let mut arcs = Vec::new();
            for _ in 0..30 {
                let u = rng.next_below(n) as u32;
                let v = rng.next_below(n) as u32;
                arcs.push((u, v));
            }
            let text: String = arcs.iter().map(|(u, v)| format!("n{u} n{v}\n")).collect();
            let raw = parse_edge_list(text.as_bytes(), true).unwrap();
            let pre = preprocess(&raw);

            // Oracle pipeline on the same dense ids.
            let clean: Vec<(u32, u32)> = raw.edges.iter().copied().filter(|&(u, v)| u != v).collect();
            let scc = scc_oracle(raw.vertex_count, &clean);
            let in_scc: std::collections::HashSet<u32> = scc.iter().copied().collect();
            let arcset: std::collections::HashSet<(u32, u32)> = clean
                .iter()
                .filter(|(u, v)| in_scc.contains(u) && in_scc.contains(v))
                .copied()
                .collect();
            let mut want: BTreeSet<(String, String)> = BTreeSet::new();
            for &(u, v) in &arcset {
                if u < v && arcset.contains(&(v, u)) {
                    want.insert((raw.labels[u as usize].clone(), raw.labels[v as usize].clone()));
                }
            }
            let got: BTreeSet<(String, String)> = pre
                .graph
                .edges()
                .map(|(u, v)| {
                    let (a, b) = (pre.labels[u as usize].clone(), pre.labels[v as usize].clone());
                    if a <= b { (a, b) } else { (b, a) }
                })
                .collect();
            let want: BTreeSet<(String, String)> = want
                .into_iter()
                .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
                .collect();
            assert_eq!(got, want, "seed {seed}");
        }
    }

    #[test]
    fn gzip_inputs_inflate_transparently() {
        use flate2::write::GzEncoder;
        use flate2::Compression;
        use std::io::Write;
        let mut enc = GzEncoder::new(Vec::new(), Compression::default());
        enc.write_all(b"0 1\n1 2\n").unwrap();
        let gz = enc.finish().unwrap();
        let dir = std::env::temp_dir().join("maxclique-ingest-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("tiny.txt.gz");
        std::fs::write(&path, &gz).unwrap();
        let bytes = read_input(&path).unwrap();
        assert_eq!(bytes, b"0 1\n1 2\n");
        std::fs::remove_file(&path).ok();
    }
}
