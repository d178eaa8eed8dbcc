use std::cmp::Ordering;

use rand::Rng;

use super::domain::Domain;
use super::individual::Individual;

/// Objective vector with both components minimized: `(-f1, f2)`.
pub fn objectives<D: Domain>(x: &Individual<D>) -> [f64; 2] {
    [-x.f1, x.f2]
}

/// `a` dominates `b` when it is no worse on every minimized objective and better on one.
pub fn dominates(a: &[f64; 2], b: &[f64; 2]) -> bool {
    a[0] <= b[0] && a[1] <= b[1] && (a[0] < b[0] || a[1] < b[1])
}

/// Fronts of indices, best first; each front is in ascending index order.
pub fn nondominated_sort(objs: &[[f64; 2]]) -> Vec<Vec<usize>> {
    let n = objs.len();
    let mut dominated_by_count = vec![0usize; n];
    let mut dominates_list: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if dominates(&objs[i], &objs[j]) {
                dominates_list[i].push(j);
                dominated_by_count[j] += 1;
            } else if dominates(&objs[j], &objs[i]) {
                dominates_list[j].push(i);
                dominated_by_count[i] += 1;
            }
        }
    }
    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominates_list[i] {
                dominated_by_count[j] -= 1;
                if dominated_by_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(std::mem::replace(&mut current, next));
    }
    fronts
}

/// Crowding distance of each member of `front` (same order). Extremes on either objective get
/// infinity; interior points sum their normalized neighbour gaps.
pub fn crowding_distances(objs: &[[f64; 2]], front: &[usize]) -> Vec<f64> {
    let n = front.len();
    let mut dist = vec![0.0; n];
    if n <= 2 {
        return vec![f64::INFINITY; n];
    }
    for m in 0..2 {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| objs[front[a]][m].total_cmp(&objs[front[b]][m]));
        let lo = objs[front[order[0]]][m];
        let hi = objs[front[order[n - 1]]][m];
        dist[order[0]] = f64::INFINITY;
        dist[order[n - 1]] = f64::INFINITY;
        let range = hi - lo;
        if !(range > 0.0 && range.is_finite()) {
            continue;
        }
        for k in 1..n - 1 {
            let gap = objs[front[order[k + 1]]][m] - objs[front[order[k - 1]]][m];
            dist[order[k]] += gap / range;
        }
    }
    dist
}

/// Sets `rank` and `crowding` on every individual.
pub fn assign_rank_and_crowding<D: Domain>(pop: &mut [Individual<D>]) -> Vec<Vec<usize>> {
    let objs: Vec<[f64; 2]> = pop.iter().map(objectives).collect();
    let fronts = nondominated_sort(&objs);
    for (rank, front) in fronts.iter().enumerate() {
        let crowd = crowding_distances(&objs, front);
        for (&i, c) in front.iter().zip(crowd) {
            pop[i].rank = rank;
            pop[i].crowding = c;
        }
    }
    fronts
}

/// Environmental selection: whole fronts by rank, the boundary front by descending crowding.
pub fn crowding_and_select<D: Domain>(mut pop: Vec<Individual<D>>, popsize: usize) -> Vec<Individual<D>> {
    let fronts = assign_rank_and_crowding(&mut pop);
    let mut keep = Vec::with_capacity(popsize);
    for front in fronts {
        if keep.len() + front.len() <= popsize {
            keep.extend(front);
        } else {
            let mut rest = front;
            rest.sort_by(|&a, &b| pop[b].crowding.total_cmp(&pop[a].crowding));
            keep.extend(rest.into_iter().take(popsize - keep.len()));
        }
        if keep.len() == popsize {
            break;
        }
    }
    keep.sort_unstable();
    let mut slots: Vec<Option<Individual<D>>> = pop.into_iter().map(Some).collect();
    keep.into_iter().map(|i| slots[i].take().expect("index kept once")).collect()
}

/// Lower rank wins, then higher crowding, then a coin flip.
pub fn tournament_winner<'a, D: Domain, R: Rng + ?Sized>(
    a: &'a Individual<D>,
    b: &'a Individual<D>,
    rng: &mut R,
) -> &'a Individual<D> {
    match a.rank.cmp(&b.rank).then_with(|| b.crowding.total_cmp(&a.crowding)) {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => {
            if rng.gen_bool(0.5) {
                a
            } else {
                b
            }
        }
    }
}

/// Winners of `count` binary tournaments between uniformly drawn contestants, deep-copied.
pub fn tournament_offspring<D: Domain, R: Rng + ?Sized>(
    pop: &[Individual<D>],
    count: usize,
    rng: &mut R,
) -> Vec<Individual<D>> {
    (0..count)
        .map(|_| {
            let a = &pop[rng.gen_range(0..pop.len())];
            let b = &pop[rng.gen_range(0..pop.len())];
            tournament_winner(a, b, rng).clone()
        })
        .collect()
}

/// Indices of the `n` worst individuals: highest rank, then lowest crowding, then random order.
pub fn repopulation_victims<D: Domain, R: Rng + ?Sized>(pop: &[Individual<D>], n: usize, rng: &mut R) -> Vec<usize> {
    let keys: Vec<(usize, f64, u64)> = pop.iter().map(|x| (x.rank, x.crowding, rng.gen())).collect();
    let mut order: Vec<usize> = (0..pop.len()).collect();
    order.sort_by(|&a, &b| {
        let (ra, ca, ta) = keys[a];
        let (rb, cb, tb) = keys[b];
        rb.cmp(&ra).then_with(|| ca.total_cmp(&cb)).then_with(|| ta.cmp(&tb))
    });
    order.truncate(n);
    order
}
