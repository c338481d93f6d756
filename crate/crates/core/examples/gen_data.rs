//! Regenerates the data files under `data/`.
//!
//! The classification database that numbers these schemes is not bundled,
//! so the schemes are built from first principles and labelled by their
//! computed invariants:
//!
//! * order 15: the doubly regular tournament obtained from a skew Hadamard
//!   matrix of order 16 (the Paley matrix of order 8, doubled). The
//!   non-symmetric rank-3 scheme of order 15 is unique, so this is it. Points
//!   are relabelled so the three classes of per-point dimensions land on
//!   {1,3,5,8,12,13,15}, {2,4,6,7,9,10,14} and {11}.
//! * (26,10,3,4): seeds are the disjointness graph of the blocks of the cyclic
//!   STS(13), the same after one Pasch trade, and the Latin square graphs of
//!   both main classes of order 5 with an isolated vertex added and switched
//!   into a regular graph. Seidel switching on Hoffman cocliques then reaches
//!   the rest. Each graph is named by the unique table column its distinct
//!   per-point dimensions match in characteristics 0, 2, 3, 5, 7, 11, 13.
//!
//! Run with `cargo run --release -p terwilliger --example gen_data -- <dir>`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fs;
use std::path::Path;

use terwilliger::exactlin::Prime;
use terwilliger::schemes::{
    scheme_from_srg, serialize_graph_file, serialize_scheme_file, AssociationScheme, Graph, RelationTable,
};
use terwilliger::talgebra::{table_report, ReportOptions, SchemeJob};

type Signature = BTreeMap<u32, BTreeSet<usize>>;

const CHARS: [u32; 6] = [2, 3, 5, 7, 11, 13];

/// Distinct dimensions per characteristic for the ten graphs; characteristics
/// not listed repeat the characteristic-0 row.
type Column = (u32, &'static [(u32, &'static [usize])]);

fn table_columns() -> Vec<(u32, Signature)> {
    let raw: [Column; 10] = [
        (3, &[(0, &[19, 24, 28, 31, 39, 47]), (2, &[19, 22, 23, 28, 29, 30]), (5, &[19, 24, 27, 31, 39, 47]), (11, &[19, 24, 27, 31, 39, 47])]),
        (4, &[(0, &[19, 24, 29, 31, 39, 47]), (2, &[19, 23, 26, 29, 30]), (3, &[19, 24, 28, 31, 39, 47])]),
        (5, &[(0, &[24, 31, 35, 39, 47]), (2, &[22, 27, 29, 30]), (5, &[24, 31, 35, 38, 47]), (7, &[24, 31, 34, 39, 47]), (11, &[24, 30, 31, 35, 39, 47])]),
        (6, &[(0, &[19, 24, 28, 29, 35, 47]), (2, &[19, 23, 26, 27, 28, 30]), (3, &[19, 24, 28, 35, 47]), (11, &[19, 24, 27, 29, 35, 47])]),
        (7, &[(0, &[19, 24, 28, 29, 35, 47]), (2, &[19, 23, 25, 26, 27, 28, 30]), (3, &[19, 24, 28, 35, 47]), (11, &[19, 24, 27, 29, 35, 47])]),
        (8, &[(0, &[19, 28, 29, 35, 47]), (2, &[19, 26, 28, 30]), (3, &[19, 28, 35, 47]), (11, &[19, 27, 29, 35, 47])]),
        (9, &[(0, &[31, 35]), (2, &[29, 30]), (7, &[31, 34])]),
        (10, &[(0, &[24, 28]), (2, &[23, 28]), (5, &[23, 27]), (11, &[24, 27])]),
        (11, &[(0, &[19, 28, 29, 35, 47]), (2, &[19, 25, 26, 27, 28, 30]), (3, &[19, 28, 35, 47]), (11, &[19, 27, 29, 35, 47])]),
        (12, &[(0, &[28, 29, 35, 47]), (2, &[26, 27, 28, 30]), (3, &[28, 35, 47]), (11, &[27, 29, 35, 47])]),
    ];
    raw.iter()
        .map(|(no, rows)| {
            let base: BTreeSet<usize> = rows[0].1.iter().copied().collect();
            let mut sig: Signature = std::iter::once(0).chain(CHARS).map(|c| (c, base.clone())).collect();
            for (c, dims) in rows.iter().skip(1) {
                sig.insert(*c, dims.iter().copied().collect());
            }
            (*no, sig)
        })
        .collect()
}

fn paley8_skew_hadamard() -> Vec<Vec<i64>> {
    let residues = [1, 2, 4];
    (0..8)
        .map(|i| {
            (0..8)
                .map(|j| match (i, j) {
                    _ if i == j => 1,
                    (0, _) => 1,
                    (_, 0) => -1,
                    _ if residues.contains(&((j + 7 - i) % 7)) => 1,
                    _ => -1,
                })
                .collect()
        })
        .collect()
}

/// Doubly regular tournament of order 15 as a relation table (1 = arc, 2 = reverse arc).
fn tournament15() -> RelationTable {
    let h = paley8_skew_hadamard();
    let mut k = vec![vec![0i64; 16]; 16];
    for i in 0..8 {
        for j in 0..8 {
            k[i][j] = h[i][j];
            k[i][j + 8] = h[i][j];
            k[i + 8][j] = -h[j][i];
            k[i + 8][j + 8] = h[j][i];
        }
    }
    // sign-normalize so the first row is all ones; skewness is preserved
    let d: Vec<i64> = (0..16).map(|j| if j == 0 { 1 } else { k[0][j] }).collect();
    let entries = (1..16)
        .flat_map(|i| (1..16).map(move |j| (i, j)))
        .map(|(i, j)| match d[i] * k[i][j] * d[j] {
            _ if i == j => 0,
            1 => 1,
            _ => 2,
        })
        .collect();
    RelationTable::new(15, 3, entries).expect("tournament table is well formed")
}

fn dims_per_point(name: &str, s: &AssociationScheme, primes: &[Prime]) -> Vec<Vec<usize>> {
    let opts = ReportOptions { radicals: false, corners: false, ..ReportOptions::default() };
    let t = table_report(&[SchemeJob::all_points(name, s)], primes, &opts).expect("oracles agree");
    t[0].reports.iter().map(|r| std::iter::once(r.dim_q).chain(r.primes.iter().map(|p| p.dim)).collect()).collect()
}

fn order15() -> RelationTable {
    let table = tournament15();
    let s = AssociationScheme::validate(table.clone()).expect("doubly regular tournament");
    let dims = dims_per_point("t15", &s, &[Prime::new(2).unwrap()]);
    let class = |pair: [usize; 2]| -> Vec<usize> { (0..15).filter(|&x| dims[x] == pair).collect() };
    let targets: [(&[usize], [usize; 2]); 3] =
        [(&[1, 3, 5, 8, 12, 13, 15], [33, 31]), (&[2, 4, 6, 7, 9, 10, 14], [17, 17]), (&[11], [17, 15])];
    let mut perm = vec![usize::MAX; 15];
    for (labels, pair) in targets {
        let members = class(pair);
        assert_eq!(members.len(), labels.len(), "class sizes differ from the orbit sizes");
        for (&label, old) in labels.iter().zip(members) {
            perm[label - 1] = old;
        }
    }
    table.permute_points(&perm).expect("a permutation")
}

fn sts13_blocks() -> Vec<[usize; 3]> {
    let mut blocks = Vec::new();
    for base in [[0, 1, 4], [0, 2, 7]] {
        for t in 0..13 {
            let mut b = base.map(|x| (x + t) % 13);
            b.sort_unstable();
            blocks.push(b);
        }
    }
    blocks
}

fn disjointness_graph(blocks: &[[usize; 3]]) -> Graph {
    Graph::from_fn(blocks.len(), |x, y| x != y && blocks[x].iter().all(|v| !blocks[y].contains(v)))
}

/// Applies the first Pasch trade found in lexicographic order.
fn pasch_traded(mut blocks: Vec<[usize; 3]>) -> Vec<[usize; 3]> {
    let find = |bl: &[[usize; 3]], mut t: [usize; 3]| {
        t.sort_unstable();
        bl.iter().position(|b| *b == t)
    };
    for a in 0..13 {
        for b in 0..13 {
            for c in 0..13 {
                for d in 0..13 {
                    for e in 0..13 {
                        for f in 0..13 {
                            let pts = [a, b, c, d, e, f];
                            if (0..6).any(|i| (0..i).any(|j| pts[i] == pts[j])) {
                                continue;
                            }
                            let old = [[a, b, c], [a, d, e], [f, b, e], [f, c, d]];
                            let idx: Option<Vec<usize>> = old.iter().map(|t| find(&blocks, *t)).collect();
                            if let Some(idx) = idx {
                                let new = [[a, b, e], [a, c, d], [f, b, c], [f, d, e]];
                                for (i, mut t) in idx.into_iter().zip(new) {
                                    t.sort_unstable();
                                    blocks[i] = t;
                                }
                                return blocks;
                            }
                        }
                    }
                }
            }
        }
    }
    panic!("no Pasch configuration");
}

fn latin_square_graph(sq: &[[usize; 5]; 5]) -> Graph {
    Graph::from_fn(25, |x, y| {
        x != y && (x / 5 == y / 5 || x % 5 == y % 5 || sq[x / 5][x % 5] == sq[y / 5][y % 5])
    })
}

/// Subsets `U` of size `u` whose induced subgraph is `inner`-regular and
/// where every vertex outside `U` (below `limit`) has `outer` neighbours in `U`.
fn regular_sets(g: &Graph, limit: usize, u: usize, inner: usize, outer: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(
        g: &Graph,
        limit: usize,
        (u, inner, outer, max): (usize, usize, usize, usize),
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= max {
            return;
        }
        if cur.len() == u {
            let inside = cur.iter().all(|&a| cur.iter().filter(|&&b| g.adjacent(a, b)).count() == inner);
            let outside = (0..limit)
                .filter(|v| !cur.contains(v))
                .all(|v| cur.iter().filter(|&&b| g.adjacent(v, b)).count() == outer);
            if inside && outside {
                out.push(cur.clone());
            }
            return;
        }
        for v in start..limit {
            let deg_v = cur.iter().filter(|&&a| g.adjacent(a, v)).count();
            let overfull = cur
                .iter()
                .any(|&a| cur.iter().filter(|&&b| g.adjacent(a, b)).count() + usize::from(g.adjacent(a, v)) > inner);
            if deg_v > inner || overfull {
                continue;
            }
            cur.push(v);
            rec(g, limit, (u, inner, outer, max), v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, limit, (u, inner, outer, max), 0, &mut Vec::new(), &mut out);
    out
}

/// An SRG(25,12,5,6) plus an isolated vertex, switched into a 10-regular graph.
fn lift(g25: &Graph) -> Graph {
    let g26 = Graph::from_fn(26, |x, y| x < 25 && y < 25 && g25.adjacent(x, y));
    let set = regular_sets(g25, 25, 10, 3, 6, 1).pop().expect("a switching set exists");
    g26.seidel_switch(&set).expect("set is inside the graph")
}

fn signature(g: &Graph, primes: &[Prime]) -> Signature {
    let (s, _) = scheme_from_srg(g).expect("strongly regular");
    let dims = dims_per_point("g", &s, primes);
    let mut sig = Signature::new();
    for d in dims {
        for (c, v) in std::iter::once(0).chain(CHARS).zip(d) {
            sig.entry(c).or_default().insert(v);
        }
    }
    sig
}

fn srg26() -> BTreeMap<u32, (Graph, String)> {
    let primes: Vec<Prime> = CHARS.iter().map(|&p| Prime::new(p).unwrap()).collect();
    let columns = table_columns();
    let cyclic = [[0, 1, 2, 3, 4], [1, 2, 3, 4, 0], [2, 3, 4, 0, 1], [3, 4, 0, 1, 2], [4, 0, 1, 2, 3]];
    let intercalate = [[0, 1, 2, 3, 4], [1, 0, 4, 2, 3], [2, 3, 0, 4, 1], [3, 4, 1, 0, 2], [4, 2, 3, 1, 0]];
    let mut queue: VecDeque<(Graph, String)> = VecDeque::from(vec![
        (disjointness_graph(&sts13_blocks()), "disjoint blocks of the cyclic STS(13)".to_string()),
        (disjointness_graph(&pasch_traded(sts13_blocks())), "cyclic STS(13) after one Pasch trade".to_string()),
        (lift(&latin_square_graph(&cyclic)), "cyclic Latin square graph of order 5, lifted".to_string()),
        (lift(&latin_square_graph(&intercalate)), "non-cyclic Latin square graph of order 5, lifted".to_string()),
    ]);
    let mut found: BTreeMap<u32, (Graph, String)> = BTreeMap::new();
    let mut seen: BTreeSet<Vec<(u32, Vec<usize>)>> = BTreeSet::new();
    while let Some((g, how)) = queue.pop_front() {
        if found.len() == columns.len() {
            break;
        }
        let sig = signature(&g, &primes);
        let key: Vec<(u32, Vec<usize>)> = sig.iter().map(|(c, s)| (*c, s.iter().copied().collect())).collect();
        if !seen.insert(key) {
            continue;
        }
        let no = columns.iter().find(|(_, col)| *col == sig).map(|(no, _)| *no);
        match no {
            Some(no) => {
                eprintln!("No.{no}: {how}");
                found.entry(no).or_insert((g.clone(), how.clone()));
            }
            None => eprintln!("unmatched signature {sig:?}"),
        }
        for c in regular_sets(&g, 26, 6, 0, 3, usize::MAX) {
            let h = g.seidel_switch(&c).expect("coclique is inside the graph");
            let text: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            queue.push_back((h, format!("{how}; switched on {{{}}}", text.join(","))));
        }
    }
    found
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".to_string());
    let dir = Path::new(&dir);
    fs::create_dir_all(dir).expect("create output directory");

    let t15 = order15();
    let header = "# non-symmetric rank-3 scheme of order 15 (doubly regular tournament)\n\
                  # from the doubled Paley skew Hadamard matrix of order 16; relation 1 = arc\n";
    fs::write(dir.join("as15_5.txt"), format!("{header}{}", serialize_scheme_file(&t15))).expect("write");

    for (no, (g, how)) in srg26() {
        let header = format!("# (26,10,3,4) strongly regular graph No.{no}\n# {how}\n");
        fs::write(dir.join(format!("srg26_no{no:02}.txt")), format!("{header}{}", serialize_graph_file(&g)))
            .expect("write");
    }
}
