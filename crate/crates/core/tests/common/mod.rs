//! Slow, obviously-correct reference implementations used as test oracles.
#![allow(dead_code)]

use satgame::{ForbiddenFamily, Graph, Player, Variant};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

/// The labelled graph whose edges are the set bits of `mask` over `pairs(n)`.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Largest vertex count of a simple path, capped at `cap`, by exhaustive DFS.
pub fn longest_path(g: &Graph, cap: usize) -> usize {
    fn grow(a: &[Vec<bool>], at: usize, seen: &mut Vec<bool>, len: usize, cap: usize, best: &mut usize) {
        *best = (*best).max(len);
        for w in 0..a.len() {
            if *best >= cap {
                return;
            }
            if a[at][w] && !seen[w] {
                seen[w] = true;
                grow(a, w, seen, len + 1, cap, best);
                seen[w] = false;
            }
        }
    }
    let a = adjacency(g);
    let mut best = 0;
    for s in 0..g.n() {
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        grow(&a, s, &mut seen, 1, cap, &mut best);
    }
    best.min(cap)
}

pub fn largest_component(g: &Graph) -> usize {
    let a = adjacency(g);
    let n = g.n();
    let mut seen = vec![false; n];
    let mut best = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        seen[s] = true;
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for y in 0..n {
                if a[x][y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        best = best.max(size);
    }
    best
}

pub fn is_free(g: &Graph, family: &ForbiddenFamily) -> bool {
    match family {
        ForbiddenFamily::Path(k) => longest_path(g, *k) < *k,
        ForbiddenFamily::TreeFamily(k) => largest_component(g) < *k,
        ForbiddenFamily::Star(s) => (0..g.n()).all(|v| adjacency(g)[v].iter().filter(|&&b| b).count() < *s),
        ForbiddenFamily::ExplicitList(_) => unimplemented!("no oracle for explicit lists"),
    }
}

pub fn legal(g: &Graph, family: &ForbiddenFamily) -> Vec<(usize, usize)> {
    pairs(g.n())
        .into_iter()
        .filter(|&(u, v)| !g.has_edge(u, v) && is_free(&g.add_edge(u, v).unwrap(), family))
        .collect()
}

/// Plain minimax with no memo and no pruning.
pub fn minimax(g: &Graph, family: &ForbiddenFamily, variant: Variant, to_move: Player) -> usize {
    let moves = legal(g, family);
    if moves.is_empty() {
        return g.edge_count();
    }
    let mut values: Vec<usize> = moves
        .iter()
        .map(|&(u, v)| minimax(&g.add_edge(u, v).unwrap(), family, variant, to_move.other()))
        .collect();
    if variant == Variant::ProlongerMayPass && to_move == Player::Prolonger {
        values.push(minimax(g, family, variant, Player::Shortener));
    }
    match to_move {
        Player::Prolonger => *values.iter().max().unwrap(),
        Player::Shortener => *values.iter().min().unwrap(),
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical form by brute force: the lexicographically least sorted edge
/// list over all relabellings.
pub fn brute_canon(g: &Graph) -> Vec<(usize, usize)> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    permutations(g.n())
        .into_iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap()
}

/// Graphs on `n` vertices up to isomorphism, counted with Burnside's lemma
/// over the induced action on vertex pairs.
pub fn burnside_count(n: usize) -> u64 {
    let ps = pairs(n);
    let index = |u: usize, v: usize| ps.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    let mut total: u64 = 0;
    for p in &perms {
        let mut seen = vec![false; ps.len()];
        let mut cycles = 0;
        for start in 0..ps.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                let (u, v) = ps[at];
                at = index(p[u], p[v]);
            }
        }
        total += 1u64 << cycles;
    }
    total / perms.len() as u64
}
