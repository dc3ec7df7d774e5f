//! Hardcoded test graphs, embedded as edge-list constants.
//!
//! `cube_q3` and `wagner_v8` are a pair of 3-regular 8-vertex graphs that
//! agree on every counting invariant (degrees, edge count) yet are not
//! isomorphic: the first is planar (it is the cube graph Q3), the
//! second is its twist onto a Möbius strip and is non-planar. Vertex
//! letters A-H map to indices 0-7.
//!
//! `rook_4x4` and `shrikhande` are the classic same-parameter pair of
//! strongly regular graphs srg(16, 6, 2, 2): identical degree sequence,
//! common-neighbor counts, and spectrum, but non-isomorphic — every
//! vertex neighborhood induces two disjoint triangles in the rook's
//! graph versus a 6-cycle in the Shrikhande graph.

use crate::graph::Graph;

/// Cube graph Q3. A:{B,C,G} B:{A,D,H} C:{A,D,E} D:{B,C,F}
/// E:{C,F,G} F:{D,E,H} G:{A,E,H} H:{B,F,G}.
const CUBE_Q3: &str = "\
8 12
0 1
0 2
0 6
1 3
1 7
2 3
2 4
3 5
4 5
4 6
5 7
6 7
";

/// Möbius twist of Q3 (non-planar). A:{B,C,H} B:{A,D,G} C:{A,D,E}
/// D:{B,C,F} E:{C,F,G} F:{D,E,H} G:{B,E,H} H:{A,F,G}.
const WAGNER_V8: &str = "\
8 12
0 1
0 2
0 7
1 3
1 6
2 3
2 4
3 5
4 5
4 6
5 7
6 7
";

/// 4x4 rook's graph: vertex (i, j) at index 4i + j, edges between cells
/// sharing a row or a column.
const ROOK_4X4: &str = "\
16 48
0 1
0 2
0 3
0 4
0 8
0 12
1 2
1 3
1 5
1 9
1 13
2 3
2 6
2 10
2 14
3 7
3 11
3 15
4 5
4 6
4 7
4 8
4 12
5 6
5 7
5 9
5 13
6 7
6 10
6 14
7 11
7 15
8 9
8 10
8 11
8 12
9 10
9 11
9 13
10 11
10 14
11 15
12 13
12 14
12 15
13 14
13 15
14 15
";

/// Shrikhande graph: vertex (i, j) in Z4 x Z4 at index 4i + j, connection
/// set {±(1,0), ±(0,1), ±(1,1)}.
const SHRIKHANDE: &str = "\
16 48
0 1
0 3
0 4
0 5
0 12
0 15
1 2
1 5
1 6
1 12
1 13
2 3
2 6
2 7
2 13
2 14
3 4
3 7
3 14
3 15
4 5
4 7
4 8
4 9
5 6
5 9
5 10
6 7
6 10
6 11
7 8
7 11
8 9
8 11
8 12
8 13
9 10
9 13
9 14
10 11
10 14
10 15
11 12
11 15
12 13
12 15
13 14
14 15
";

pub fn cube_q3() -> Graph {
    Graph::from_edge_list(CUBE_Q3).expect("fixture is valid")
}

pub fn wagner_v8() -> Graph {
    Graph::from_edge_list(WAGNER_V8).expect("fixture is valid")
}

pub fn rook_4x4() -> Graph {
    Graph::from_edge_list(ROOK_4X4).expect("fixture is valid")
}

pub fn shrikhande() -> Graph {
    Graph::from_edge_list(SHRIKHANDE).expect("fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_is_cubic_on_8_vertices() {
        let g = cube_q3();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree_sequence(), vec![3; 8]);
        // A's immediate adjacencies are B, C and G
        assert_eq!(g.neighbors(0).unwrap(), &[1, 2, 6]);
    }

    #[test]
    fn wagner_is_cubic_on_8_vertices() {
        let h = wagner_v8();
        assert_eq!(h.n(), 8);
        assert_eq!(h.edge_count(), 12);
        assert_eq!(h.degree_sequence(), vec![3; 8]);
        // A's immediate adjacencies are B, C and H
        assert_eq!(h.neighbors(0).unwrap(), &[1, 2, 7]);
    }

    #[test]
    fn cube_is_bipartite_wagner_is_not() {
        // 2-color by BFS; succeeds on the cube, fails on its twist.
        fn bipartite(g: &Graph) -> bool {
            let mut color = vec![None; g.n()];
            for start in 0..g.n() {
                if color[start].is_some() {
                    continue;
                }
                color[start] = Some(false);
                let mut queue = vec![start];
                while let Some(v) = queue.pop() {
                    let cv = color[v].unwrap();
                    for &w in g.neighbors(v).unwrap() {
                        match color[w] {
                            None => {
                                color[w] = Some(!cv);
                                queue.push(w);
                            }
                            Some(cw) if cw == cv => return false,
                            Some(_) => {}
                        }
                    }
                }
            }
            true
        }
        assert!(bipartite(&cube_q3()));
        assert!(!bipartite(&wagner_v8()));
    }

    #[test]
    fn rook_and_shrikhande_share_srg_parameters() {
        for g in [rook_4x4(), shrikhande()] {
            assert_eq!(g.n(), 16);
            assert_eq!(g.edge_count(), 48);
            assert_eq!(g.degree_sequence(), vec![6; 16]);
            for u in 0..16 {
                for v in (u + 1)..16 {
                    let common = g
                        .neighbors(u)
                        .unwrap()
                        .iter()
                        .filter(|w| g.has_edge(v, **w))
                        .count();
                    assert_eq!(common, 2, "common neighbors of {u},{v}");
                }
            }
        }
    }
}
