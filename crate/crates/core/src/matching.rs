//! Maximum-cardinality bipartite matching (Hopcroft–Karp).
//!
//! Left vertices and their adjacency lists are explored in ascending index
//! order, so the matching returned is a deterministic function of the input.

use std::collections::VecDeque;

const INF: u32 = u32::MAX;

/// A matching between `left` and `right` vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub left_mate: Vec<Option<u32>>,
    pub right_mate: Vec<Option<u32>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_mate.iter().filter(|m| m.is_some()).count()
    }

    pub fn saturates_left(&self) -> bool {
        self.left_mate.iter().all(Option::is_some)
    }

    /// Matched `(left, right)` pairs in ascending left order.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.left_mate
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l as u32, r)))
    }
}

/// Maximum matching of the bipartite graph whose left vertex `l` is adjacent
/// to every right vertex in `adj[l]` (ascending).
pub fn max_matching<A: AsRef<[u32]>>(adj: &[A], num_right: usize) -> Matching {
    max_matching_below(adj, num_right, num_right as u32)
}

/// Same as [`max_matching`], but ignores every right vertex `>= right_limit`.
/// Adjacency lists must be ascending; they are cut at the first such vertex.
pub fn max_matching_below<A: AsRef<[u32]>>(adj: &[A], num_right: usize, right_limit: u32) -> Matching {
    let lists: Vec<&[u32]> = adj
        .iter()
        .map(|a| {
            let a = a.as_ref();
            &a[..a.partition_point(|&r| r < right_limit)]
        })
        .collect();
    HopcroftKarp::new(&lists, num_right).run()
}

struct HopcroftKarp<'a> {
    adj: &'a [&'a [u32]],
    left_mate: Vec<u32>,
    right_mate: Vec<u32>,
    dist: Vec<u32>,
    cursor: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    fn new(adj: &'a [&'a [u32]], num_right: usize) -> Self {
        let n = adj.len();
        HopcroftKarp {
            adj,
            left_mate: vec![INF; n],
            right_mate: vec![INF; num_right],
            dist: vec![INF; n],
            cursor: vec![0; n],
        }
    }

    fn run(mut self) -> Matching {
        while self.layer() {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            for u in 0..self.adj.len() {
                if self.left_mate[u] == INF {
                    self.augment_from(u as u32);
                }
            }
        }
        let wrap = |v: Vec<u32>| v.into_iter().map(|x| (x != INF).then_some(x)).collect();
        Matching {
            left_mate: wrap(self.left_mate),
            right_mate: wrap(self.right_mate),
        }
    }

    /// BFS layering from free left vertices. Returns whether some free right
    /// vertex is reachable.
    fn layer(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for u in 0..self.adj.len() {
            if self.left_mate[u] == INF {
                self.dist[u] = 0;
                queue.push_back(u as u32);
            } else {
                self.dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            let du = self.dist[u as usize];
            for &v in self.adj[u as usize] {
                let m = self.right_mate[v as usize];
                if m == INF {
                    found = true;
                } else if self.dist[m as usize] == INF {
                    self.dist[m as usize] = du + 1;
                    queue.push_back(m);
                }
            }
        }
        found
    }

    /// Iterative layered DFS from free left vertex `start`.
    fn augment_from(&mut self, start: u32) -> bool {
        let mut stack: Vec<u32> = vec![start];
        let mut via: Vec<u32> = Vec::new();
        while let Some(&u) = stack.last() {
            let ui = u as usize;
            let mut next = None;
            while self.cursor[ui] < self.adj[ui].len() {
                let v = self.adj[ui][self.cursor[ui]];
                self.cursor[ui] += 1;
                let m = self.right_mate[v as usize];
                if m == INF {
                    via.push(v);
                    for (&l, &r) in stack.iter().zip(&via) {
                        self.left_mate[l as usize] = r;
                        self.right_mate[r as usize] = l;
                    }
                    return true;
                }
                if self.dist[m as usize] == self.dist[ui].wrapping_add(1) {
                    next = Some((v, m));
                    break;
                }
            }
            match next {
                Some((v, m)) => {
                    via.push(v);
                    stack.push(m);
                }
                None => {
                    self.dist[ui] = INF;
                    stack.pop();
                    via.pop();
                }
            }
        }
        false
    }
}
