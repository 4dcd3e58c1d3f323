#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use idsub::BipartiteGraph;
use proptest::prelude::*;
use serde_json::Value;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Runs the `idsub` binary inside the fixture directory so file arguments stay relative.
pub fn idsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idsub"))
        .args(args)
        .current_dir(data_dir())
        .env_remove("IDSUB_GUARD")
        .output()
        .expect("spawn idsub")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// JSON output with `wall_time_ms` removed.
pub fn json_without_timing(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).expect("valid JSON");
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

/// Bench CSV with the `wall_ms` column removed.
pub fn csv_without_timing(text: &str) -> String {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap_or("").split(',').collect();
    let col = header.iter().position(|&h| h == "wall_ms");
    let strip = |line: &str| -> String {
        line.split(',')
            .enumerate()
            .filter(|(i, _)| Some(*i) != col)
            .map(|(_, f)| f)
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = strip(&header.join(","));
    for line in lines {
        out.push('\n');
        out.push_str(&strip(line));
    }
    out
}

pub fn bitmask_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

/// Largest matching between `x` and `y` found by trying every edge subset.
pub fn brute_force_matching_size(g: &BipartiteGraph, x: &[usize], y: &[usize]) -> usize {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|(l, r)| x.contains(l) && y.contains(r))
        .collect();
    assert!(edges.len() <= 20, "too many edges for brute force");
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let chosen: Vec<(usize, usize)> = (0..edges.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        let mut ls: Vec<usize> = chosen.iter().map(|e| e.0).collect();
        let mut rs: Vec<usize> = chosen.iter().map(|e| e.1).collect();
        ls.sort_unstable();
        ls.dedup();
        rs.sort_unstable();
        rs.dedup();
        if ls.len() == chosen.len() && rs.len() == chosen.len() {
            best = best.max(chosen.len());
        }
    }
    best
}

/// Strategy for a bipartite graph with the given size bounds and any edge set.
pub fn arb_graph(max_left: usize, max_right: usize) -> impl Strategy<Value = BipartiteGraph> {
    (0..=max_left, 0..=max_right).prop_flat_map(|(nl, nr)| {
        proptest::collection::vec(any::<bool>(), nl * nr).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..nl * nr)
                .filter(|&i| bits[i])
                .map(|i| (i / nr.max(1), i % nr.max(1)))
                .collect();
            BipartiteGraph::build(nl, nr, &edges).unwrap()
        })
    })
}

/// Strategy for a graph with a bounded number of edges, suitable for edge-subset brute force.
pub fn arb_sparse_graph(max_left: usize, max_right: usize, max_edges: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_left, 1..=max_right).prop_flat_map(move |(nl, nr)| {
        proptest::collection::vec((0..nl, 0..nr), 0..=max_edges)
            .prop_map(move |edges| BipartiteGraph::build(nl, nr, &edges).unwrap())
    })
}

pub fn subset_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|bits| {
        bits.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect()
    })
}

/// Strategy for a graph together with a subset of its left side.
pub fn arb_graph_and_left_subset(max_left: usize, max_right: usize) -> impl Strategy<Value = (BipartiteGraph, Vec<usize>)> {
    arb_graph(max_left, max_right).prop_flat_map(|g| {
        let n = g.n_left();
        (Just(g), subset_of(n))
    })
}
