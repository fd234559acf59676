use super::poset::Poset;

/// Roles (1-based) that the spring forces long.
pub const SPRING_LONG_ROLES: [usize; 2] = [4, 5];
/// Roles (1-based) that the spring forces short.
pub const SPRING_SHORT_ROLES: [usize; 2] = [2, 3];

// Strict relations of the spring on roles 1..6, closed transitively.
const SPRING_LT: [(usize, usize); 9] = [
    (1, 4), (1, 5), (4, 3), (2, 3), (3, 6),
    (1, 3), (1, 6), (4, 6), (2, 6),
];

fn spring_lt(a: usize, b: usize) -> bool {
    SPRING_LT.contains(&(a, b))
}

/// `elems[i]` plays role `i + 1`. With `dual` set the relation is reversed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpringWitness {
    pub elems: [usize; 6],
    pub dual: bool,
}

impl SpringWitness {
    pub fn role(&self, role: usize) -> usize {
        self.elems[role - 1]
    }

    pub fn long_elements(&self) -> [usize; 2] {
        SPRING_LONG_ROLES.map(|r| self.role(r))
    }

    pub fn short_elements(&self) -> [usize; 2] {
        SPRING_SHORT_ROLES.map(|r| self.role(r))
    }

    pub fn sorted_elements(&self) -> Vec<usize> {
        let mut v = self.elems.to_vec();
        v.sort_unstable();
        v
    }
}

fn search(p: &Poset, dual: bool, out: &mut Vec<SpringWitness>) {
    let n = p.len();
    let lt = |x: usize, y: usize| if dual { p.lt(y, x) } else { p.lt(x, y) };
    // backbone 1 ≺ 4 ≺ 3 ≺ 6
    for a in 0..n {
        for b in (0..n).filter(|&b| lt(a, b)) {
            for c in (0..n).filter(|&c| lt(b, c)) {
                for d in (0..n).filter(|&d| lt(c, d)) {
                    for e in (0..n).filter(|&e| lt(a, e) && p.incomparable(e, b)) {
                        for f in (0..n).filter(|&f| lt(f, c) && p.incomparable(f, a)) {
                            let elems = [a, f, c, b, e, d];
                            if induces_spring(&elems, &lt) {
                                out.push(SpringWitness { elems, dual });
                            }
                        }
                    }
                }
            }
        }
    }
}

fn induces_spring(elems: &[usize; 6], lt: &impl Fn(usize, usize) -> bool) -> bool {
    let distinct = (0..6).all(|i| (i + 1..6).all(|j| elems[i] != elems[j]));
    distinct
        && (0..6).all(|i| {
            (0..6).all(|j| i == j || lt(elems[i], elems[j]) == spring_lt(i + 1, j + 1))
        })
}

/// Every induced copy of the spring or its dual, with its role assignment.
pub fn find_springs(p: &Poset) -> Vec<SpringWitness> {
    let mut out = Vec::new();
    search(p, false, &mut out);
    search(p, true, &mut out);
    out
}
