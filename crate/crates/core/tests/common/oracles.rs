//! Independent checks used by the integration tests. Nothing here calls the
//! library's own face tracing or twist code.

use twistbound::diagram::LinkDiagram;

/// |det| of the colouring matrix with one row and column struck out.
pub fn determinant(d: &LinkDiagram) -> i128 {
    let n = d.crossing_count();
    if n == 0 {
        return 1;
    }
    // Over-arcs: edges glued through the over slots (1, 3) of each crossing.
    let m = d.edges().len();
    let mut parent: Vec<usize> = (0..=m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for c in d.crossings() {
        let (a, b) = (find(&mut parent, c.slots[1]), find(&mut parent, c.slots[3]));
        parent[a] = b;
    }
    let mut arc_id = vec![usize::MAX; m + 1];
    let mut arcs = 0;
    for e in 1..=m {
        let r = find(&mut parent, e);
        if arc_id[r] == usize::MAX {
            arc_id[r] = arcs;
            arcs += 1;
        }
    }
    let mut rows = vec![vec![0i128; arcs]; n];
    for (i, c) in d.crossings().iter().enumerate() {
        let arc = |e: usize, p: &mut Vec<usize>| arc_id[find(p, e)];
        rows[i][arc(c.slots[1], &mut parent)] += 2;
        rows[i][arc(c.slots[0], &mut parent)] -= 1;
        rows[i][arc(c.slots[2], &mut parent)] -= 1;
    }
    // Strike the last row and column (square when arcs == n).
    let k = n.min(arcs) - 1;
    let mut a: Vec<Vec<i128>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
    bareiss(&mut a).abs()
}

fn bareiss(a: &mut [Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// True when no two edges together separate the crossings: the diagram is
/// not visibly a connected sum.
pub fn is_diagrammatically_prime(d: &LinkDiagram) -> bool {
    let n = d.crossing_count();
    let edges: Vec<(usize, usize)> = d
        .edges()
        .iter()
        .map(|e| (e.from.crossing, e.to.crossing))
        .collect();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(c) = stack.pop() {
                for (k, &(a, b)) in edges.iter().enumerate() {
                    if k == i || k == j {
                        continue;
                    }
                    for (x, y) in [(a, b), (b, a)] {
                        if x == c && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            if seen.iter().any(|s| !s) {
                return false;
            }
        }
    }
    true
}

/// Linking numbers between distinct components, as `(i, j, lk)` with i < j.
pub fn linking_numbers(d: &LinkDiagram) -> Vec<(usize, usize, i64)> {
    let strands = d.strands();
    let mut comp_of_edge = vec![usize::MAX; d.edges().len() + 1];
    for (i, s) in strands.iter().enumerate() {
        for inc in s {
            comp_of_edge[d.crossings()[inc.crossing].edge(inc.slot)] = i;
        }
    }
    let k = strands.len();
    let mut twice = vec![vec![0i64; k]; k];
    for c in d.crossings() {
        let (a, b) = (comp_of_edge[c.slots[0]], comp_of_edge[c.slots[1]]);
        if a != b {
            twice[a.min(b)][a.max(b)] += c.sign() as i64;
        }
    }
    (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, twice[i][j] / 2))
        .collect()
}
