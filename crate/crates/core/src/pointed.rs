//! Skeletal braided categories with invertible simple objects.
//!
//! Objects form a finite abelian group `A`; every morphism space between
//! equal objects is a fixed abelian scalar group `K` with composition given
//! by addition, and there are no morphisms between distinct objects. The
//! associator and braiding are K-valued functions on object tuples, both
//! normalized to vanish when any argument is the unit.
//!
//! A parenthesized tensor word is a full binary tree of objects. Coherence
//! scalars of composite diagrams are computed by rotating words through the
//! left-nested normal form; path independence of that procedure is exactly
//! the pentagon and is covered by tests rather than assumed.

use crate::fingroup::FiniteAbelianGroup;
use thiserror::Error;

use crate::report::{AxiomLabel, Report, ReportOptions};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PointedError {
    #[error("associator table has length {got}, expected {want}")]
    AlphaSize { got: usize, want: usize },
    #[error("braiding table has length {got}, expected {want}")]
    BetaSize { got: usize, want: usize },
    #[error("scalar value {0} out of range for the coefficient group")]
    ScalarOutOfRange(usize),
    #[error("associator is not normalized at ({0},{1},{2})")]
    AlphaNotNormalized(usize, usize, usize),
    #[error("braiding is not normalized at ({0},{1})")]
    BetaNotNormalized(usize, usize),
    #[error("pentagon fails at ({0},{1},{2},{3})")]
    PentagonFailure(usize, usize, usize, usize),
    #[error("hexagon fails at ({0},{1},{2})")]
    HexagonFailure(usize, usize, usize),
    #[error("words have different leaf sequences")]
    LeafMismatch,
    #[error("snake equations are inconsistent for object {0}; the associator cannot be a cocycle")]
    NoSolution(usize),
}

/// A parenthesized tensor word: a full binary tree with `A`-element leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectWord {
    Leaf(usize),
    Node(Box<ObjectWord>, Box<ObjectWord>),
}

impl ObjectWord {
    pub fn node(l: ObjectWord, r: ObjectWord) -> ObjectWord {
        ObjectWord::Node(Box::new(l), Box::new(r))
    }

    /// Left-nested word `(((l0 . l1) . l2) ...)` on the given leaves.
    pub fn left_comb(leaves: &[usize]) -> ObjectWord {
        assert!(!leaves.is_empty(), "words are nonempty");
        let mut w = ObjectWord::Leaf(leaves[0]);
        for &l in &leaves[1..] {
            w = ObjectWord::node(w, ObjectWord::Leaf(l));
        }
        w
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            ObjectWord::Leaf(x) => out.push(*x),
            ObjectWord::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            ObjectWord::Leaf(_) => 1,
            ObjectWord::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// The underlying object: the sum of all leaves.
    pub fn object(&self, a: &FiniteAbelianGroup) -> usize {
        self.leaves().iter().fold(a.zero(), |acc, &x| a.add(acc, x))
    }
}

/// Skeletal braided category on the object group `A` with scalars in `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedBraidedCategory {
    a: FiniteAbelianGroup,
    k: FiniteAbelianGroup,
    /// Associator `(x+y)+z -> x+(y+z)`, dense over A^3.
    alpha: Vec<usize>,
    /// Braiding `x+y -> y+x`, dense over A^2.
    beta: Vec<usize>,
}

impl PointedBraidedCategory {
    /// Builds the category and checks every structural invariant: table
    /// sizes, normalization, the pentagon, and both hexagons.
    pub fn new(
        a: FiniteAbelianGroup,
        k: FiniteAbelianGroup,
        alpha: Vec<usize>,
        beta: Vec<usize>,
    ) -> Result<Self, PointedError> {
        let cat = Self::new_unvalidated(a, k, alpha, beta)?;
        if let Some(f) = cat.check_pentagon(ReportOptions::FirstHundred).failures().first() {
            return Err(PointedError::PentagonFailure(
                f.witness[0],
                f.witness[1],
                f.witness[2],
                f.witness[3],
            ));
        }
        if let Some(f) = cat.check_hexagons(ReportOptions::FirstHundred).failures().first() {
            return Err(PointedError::HexagonFailure(
                f.witness[0],
                f.witness[1],
                f.witness[2],
            ));
        }
        Ok(cat)
    }

    /// Size and normalization checks only; used when enumerating candidate
    /// tables whose pentagon/hexagon status is the question being asked.
    pub fn new_unvalidated(
        a: FiniteAbelianGroup,
        k: FiniteAbelianGroup,
        alpha: Vec<usize>,
        beta: Vec<usize>,
    ) -> Result<Self, PointedError> {
        let n = a.order();
        if alpha.len() != n * n * n {
            return Err(PointedError::AlphaSize { got: alpha.len(), want: n * n * n });
        }
        if beta.len() != n * n {
            return Err(PointedError::BetaSize { got: beta.len(), want: n * n });
        }
        if let Some(&v) = alpha.iter().chain(beta.iter()).find(|&&v| v >= k.order()) {
            return Err(PointedError::ScalarOutOfRange(v));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if (x == 0 || y == 0 || z == 0) && alpha[(x * n + y) * n + z] != 0 {
                        return Err(PointedError::AlphaNotNormalized(x, y, z));
                    }
                }
                if (x == 0 || y == 0) && beta[x * n + y] != 0 {
                    return Err(PointedError::BetaNotNormalized(x, y));
                }
            }
        }
        Ok(PointedBraidedCategory { a, k, alpha, beta })
    }

    /// The category with trivial associator and braiding.
    pub fn trivial(a: FiniteAbelianGroup, k: FiniteAbelianGroup) -> Self {
        let n = a.order();
        PointedBraidedCategory { alpha: vec![0; n * n * n], beta: vec![0; n * n], a, k }
    }

    pub fn objects(&self) -> &FiniteAbelianGroup {
        &self.a
    }

    pub fn scalars(&self) -> &FiniteAbelianGroup {
        &self.k
    }

    pub fn alpha(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.a.order();
        self.alpha[(x * n + y) * n + z]
    }

    pub fn beta(&self, x: usize, y: usize) -> usize {
        self.beta[x * self.a.order() + y]
    }

    pub fn alpha_table(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta_table(&self) -> &[usize] {
        &self.beta
    }

    /// Canonical evaluation scalar of the pairing `1 -> x + (-x)`.
    pub fn coev_of(&self, _x: usize) -> usize {
        // Convention: the coevaluation scalar is fixed to zero and the
        // evaluation scalar absorbs the snake correction.
        0
    }

    /// Canonical evaluation scalar of the pairing `(-x) + x -> 1`, solved
    /// from the first snake equation under `coev = 0`.
    pub fn ev_of(&self, x: usize) -> usize {
        self.k.neg(self.alpha(x, self.a.neg(x), x))
    }

    /// Pentagon verifier: in this skeletal setting the axiom is exactly the
    /// vanishing of the coboundary of the associator.
    pub fn check_pentagon(&self, opts: ReportOptions) -> Report {
        let mut report = Report::new(opts);
        let n = self.a.order();
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let mut d = self.alpha(x, y, z);
                        d = self.k.sub(d, self.alpha(self.a.add(w, x), y, z));
                        d = self.k.add(d, self.alpha(w, self.a.add(x, y), z));
                        d = self.k.sub(d, self.alpha(w, x, self.a.add(y, z)));
                        d = self.k.add(d, self.alpha(w, x, y));
                        report.record(AxiomLabel::Pentagon, &[w, x, y, z], d, 0);
                    }
                }
            }
        }
        report
    }

    /// Both hexagon axioms, evaluated as parallel word paths.
    pub fn check_hexagons(&self, opts: ReportOptions) -> Report {
        let mut report = Report::new(opts);
        let n = self.a.order();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let d1 = self.hexagon1_defect(x, y, z);
                    report.record(AxiomLabel::Hexagon1, &[x, y, z], d1, 0);
                    let d2 = self.hexagon2_defect(x, y, z);
                    report.record(AxiomLabel::Hexagon2, &[x, y, z], d2, 0);
                }
            }
        }
        report
    }

    /// First hexagon: braiding `x` past `y + z`, as two word paths from
    /// `((x.y).z)` to `(y.(z.x))`.
    fn hexagon1_defect(&self, x: usize, y: usize, z: usize) -> usize {
        let k = &self.k;
        let w0 = ObjectWord::node(
            ObjectWord::node(ObjectWord::Leaf(x), ObjectWord::Leaf(y)),
            ObjectWord::Leaf(z),
        );
        // Path 1: associate, braid x past (y.z), associate.
        let w1 = ObjectWord::node(
            ObjectWord::Leaf(x),
            ObjectWord::node(ObjectWord::Leaf(y), ObjectWord::Leaf(z)),
        );
        let mut p1 = self.reassociate(&w0, &w1).expect("same leaves");
        let (w2, s) = self.braid_at(&w1, &[]);
        p1 = k.add(p1, s);
        let w3 = ObjectWord::node(
            ObjectWord::Leaf(y),
            ObjectWord::node(ObjectWord::Leaf(z), ObjectWord::Leaf(x)),
        );
        p1 = k.add(p1, self.reassociate(&w2, &w3).expect("same leaves"));
        // Path 2: braid inside the left factor, associate, braid inside the
        // right factor.
        let (u1, s) = self.braid_at(&w0, &[Dir::L]);
        let mut p2 = s;
        let u2 = ObjectWord::node(
            ObjectWord::Leaf(y),
            ObjectWord::node(ObjectWord::Leaf(x), ObjectWord::Leaf(z)),
        );
        p2 = k.add(p2, self.reassociate(&u1, &u2).expect("same leaves"));
        let (u3, s) = self.braid_at(&u2, &[Dir::R]);
        p2 = k.add(p2, s);
        debug_assert_eq!(u3, w3);
        k.sub(p1, p2)
    }

    /// Second hexagon: braiding `x + y` past `z`, from `(x.(y.z))` to
    /// `((z.x).y)`.
    fn hexagon2_defect(&self, x: usize, y: usize, z: usize) -> usize {
        let k = &self.k;
        let w0 = ObjectWord::node(
            ObjectWord::Leaf(x),
            ObjectWord::node(ObjectWord::Leaf(y), ObjectWord::Leaf(z)),
        );
        let w1 = ObjectWord::node(
            ObjectWord::node(ObjectWord::Leaf(x), ObjectWord::Leaf(y)),
            ObjectWord::Leaf(z),
        );
        let mut p1 = self.reassociate(&w0, &w1).expect("same leaves");
        let (w2, s) = self.braid_at(&w1, &[]);
        p1 = k.add(p1, s);
        let w3 = ObjectWord::node(
            ObjectWord::node(ObjectWord::Leaf(z), ObjectWord::Leaf(x)),
            ObjectWord::Leaf(y),
        );
        p1 = k.add(p1, self.reassociate(&w2, &w3).expect("same leaves"));
        let (u1, s) = self.braid_at(&w0, &[Dir::R]);
        let mut p2 = s;
        let u2 = ObjectWord::node(
            ObjectWord::node(ObjectWord::Leaf(x), ObjectWord::Leaf(z)),
            ObjectWord::Leaf(y),
        );
        p2 = k.add(p2, self.reassociate(&u1, &u2).expect("same leaves"));
        let (u3, s) = self.braid_at(&u2, &[Dir::L]);
        p2 = k.add(p2, s);
        debug_assert_eq!(u3, w3);
        k.sub(p1, p2)
    }

    /// Swaps the two children of the node at `path`, returning the new word
    /// and the braiding scalar of the two swapped composite objects.
    pub fn braid_at(&self, w: &ObjectWord, path: &[Dir]) -> (ObjectWord, usize) {
        let mut new = w.clone();
        let scalar;
        {
            let mut node = &mut new;
            for d in path {
                node = match node {
                    ObjectWord::Node(l, r) => match d {
                        Dir::L => l,
                        Dir::R => r,
                    },
                    ObjectWord::Leaf(_) => panic!("braid path hits a leaf"),
                };
            }
            match node {
                ObjectWord::Node(l, r) => {
                    scalar = self.beta(l.object(&self.a), r.object(&self.a));
                    std::mem::swap(l, r);
                }
                ObjectWord::Leaf(_) => panic!("braid path hits a leaf"),
            }
        }
        (new, scalar)
    }

    /// Scalar of the canonical reassociation from `w` to `target`, going
    /// through the left-nested normal form. Path independent whenever the
    /// pentagon holds.
    pub fn reassociate(
        &self,
        w: &ObjectWord,
        target: &ObjectWord,
    ) -> Result<usize, PointedError> {
        if w.leaves() != target.leaves() {
            return Err(PointedError::LeafMismatch);
        }
        Ok(self.k.sub(self.fold_scalar(w), self.fold_scalar(target)))
    }

    /// Scalar of the elementary-move sequence from `w` to its left-nested
    /// normal form under the canonical folding strategy.
    pub fn fold_scalar(&self, w: &ObjectWord) -> usize {
        match w {
            ObjectWord::Leaf(_) => 0,
            ObjectWord::Node(l, r) => {
                let mut s = self.k.add(self.fold_scalar(l), self.fold_scalar(r));
                s = self.k.add(s, self.merge_cost(l.object(&self.a), &r.leaves()));
                s
            }
        }
    }

    /// Cost of flattening `(U . LN(vs))` into the left comb `LN(U ++ vs)`:
    /// one inverse associator move per right-hand leaf beyond the first.
    fn merge_cost(&self, u_sum: usize, vs: &[usize]) -> usize {
        let mut cost = 0;
        let mut prefix = vs.to_vec();
        while prefix.len() > 1 {
            let last = prefix.pop().expect("nonempty");
            let v1_sum = prefix.iter().fold(self.a.zero(), |acc, &x| self.a.add(acc, x));
            cost = self.k.sub(cost, self.alpha(u_sum, v1_sum, last));
        }
        cost
    }

    /// Enumerates every sequence of elementary associator moves between the
    /// parenthesizations of `w`'s leaves and checks the accumulated scalar
    /// depends only on the shape reached. Test oracle for path independence.
    pub fn all_paths_consistent(&self, w: &ObjectWord) -> bool {
        use std::collections::HashMap;
        let mut seen: HashMap<ObjectWord, usize> = HashMap::new();
        let mut stack = vec![(w.clone(), 0usize)];
        seen.insert(w.clone(), 0);
        while let Some((word, scalar)) = stack.pop() {
            for (next, delta) in self.elementary_moves(&word) {
                let s = self.k.add(scalar, delta);
                match seen.get(&next) {
                    Some(&prev) if prev != s => return false,
                    Some(_) => {}
                    None => {
                        seen.insert(next.clone(), s);
                        stack.push((next, s));
                    }
                }
            }
        }
        true
    }

    /// All single associator moves available on a word.
    fn elementary_moves(&self, w: &ObjectWord) -> Vec<(ObjectWord, usize)> {
        let mut out = Vec::new();
        self.collect_moves(w, &mut Vec::new(), &mut out, w);
        out
    }

    fn collect_moves(
        &self,
        node: &ObjectWord,
        path: &mut Vec<Dir>,
        out: &mut Vec<(ObjectWord, usize)>,
        root: &ObjectWord,
    ) {
        if let ObjectWord::Node(l, r) = node {
            // ((a.b).c) -> (a.(b.c)) with +alpha
            if let ObjectWord::Node(a, b) = l.as_ref() {
                let rebuilt = ObjectWord::node(
                    (**a).clone(),
                    ObjectWord::node((**b).clone(), (**r).clone()),
                );
                let scalar = self.alpha(
                    a.object(&self.a),
                    b.object(&self.a),
                    r.object(&self.a),
                );
                out.push((replace_at(root, path, rebuilt), scalar));
            }
            // (a.(b.c)) -> ((a.b).c) with -alpha
            if let ObjectWord::Node(b, c) = r.as_ref() {
                let rebuilt = ObjectWord::node(
                    ObjectWord::node((**l).clone(), (**b).clone()),
                    (**c).clone(),
                );
                let scalar = self.k.neg(self.alpha(
                    l.object(&self.a),
                    b.object(&self.a),
                    c.object(&self.a),
                ));
                out.push((replace_at(root, path, rebuilt), scalar));
            }
            path.push(Dir::L);
            self.collect_moves(l, path, out, root);
            path.pop();
            path.push(Dir::R);
            self.collect_moves(r, path, out, root);
            path.pop();
        }
    }
}

impl std::hash::Hash for ObjectWord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            ObjectWord::Leaf(x) => {
                state.write_u8(0);
                state.write_usize(*x);
            }
            ObjectWord::Node(l, r) => {
                state.write_u8(1);
                l.hash(state);
                r.hash(state);
            }
        }
    }
}

fn replace_at(root: &ObjectWord, path: &[Dir], replacement: ObjectWord) -> ObjectWord {
    match path.split_first() {
        None => replacement,
        Some((d, rest)) => match root {
            ObjectWord::Node(l, r) => match d {
                Dir::L => ObjectWord::node(replace_at(l, rest, replacement), (**r).clone()),
                Dir::R => ObjectWord::node((**l).clone(), replace_at(r, rest, replacement)),
            },
            ObjectWord::Leaf(_) => panic!("path beyond a leaf"),
        },
    }
}

/// Direction into a word node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    L,
    R,
}

/// Chosen duality data for one object: `dual = -object` with both pairing
/// scalars pinned by the snake equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualData {
    pub object: usize,
    pub dual: usize,
    pub ev: usize,
    pub coev: usize,
}

/// Right dual of `x`: the coevaluation scalar is fixed to zero and the
/// evaluation scalar is solved from the first snake equation; the second
/// snake equation is then verified, not assumed.
pub fn right_dual(cat: &PointedBraidedCategory, x: usize) -> Result<DualData, PointedError> {
    let dual = cat.objects().neg(x);
    let coev = 0;
    // snake1: coev + alpha(x, -x, x) + ev = 0.
    let ev = cat.scalars().neg(cat.scalars().add(coev, cat.alpha(x, dual, x)));
    let d = DualData { object: x, dual, ev, coev };
    if !check_snake(cat, &d) {
        return Err(PointedError::NoSolution(x));
    }
    Ok(d)
}

/// Evaluates both zig-zag composites through the word evaluator and returns
/// whether both are the identity scalar.
pub fn check_snake(cat: &PointedBraidedCategory, d: &DualData) -> bool {
    let k = cat.scalars();
    // Zig-zag on x: x -> (x.(-x)).x -> x.((-x).x) -> x.
    let mut ev1 = Evaluator::new(cat, vec![d.object]);
    ev1.pair_create(0, d.object, d.coev);
    // word is now [x, -x, x]; annihilate (-x, x) on the right.
    ev1.pair_annihilate(1, d.ev);
    let s1 = ev1.finish(&[d.object]);
    // Zig-zag on -x: -x -> (-x).(x.(-x)) -> ((-x).x).(-x) -> -x.
    let mut ev2 = Evaluator::new(cat, vec![d.dual]);
    ev2.pair_create(1, d.object, d.coev);
    ev2.pair_annihilate(0, d.ev);
    let s2 = ev2.finish(&[d.dual]);
    s1 == k.zero() && s2 == k.zero()
}

/// A mechanical diagram evaluator.
///
/// State is a leaf list whose current parenthesization is always the
/// left-nested normal form, plus an accumulated scalar. Each operation
/// reassociates to the grouping it needs, applies its scalar, and folds
/// back to normal form, so callers never hand-compute associator fillers.
pub struct Evaluator<'c> {
    cat: &'c PointedBraidedCategory,
    leaves: Vec<usize>,
    acc: usize,
}

impl<'c> Evaluator<'c> {
    pub fn new(cat: &'c PointedBraidedCategory, leaves: Vec<usize>) -> Self {
        Evaluator { cat, leaves, acc: cat.scalars().zero() }
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn add_scalar(&mut self, s: usize) {
        self.acc = self.cat.scalars().add(self.acc, s);
    }

    /// Word with leaves `i..j` grouped as a left-nested subtree.
    fn grouped_word(leaves: &[usize], i: usize, j: usize) -> ObjectWord {
        assert!(i < j && j <= leaves.len());
        let sub = ObjectWord::left_comb(&leaves[i..j]);
        let mut parts: Vec<ObjectWord> =
            leaves[..i].iter().map(|&l| ObjectWord::Leaf(l)).collect();
        parts.push(sub);
        parts.extend(leaves[j..].iter().map(|&l| ObjectWord::Leaf(l)));
        let mut w = parts.remove(0);
        for p in parts {
            w = ObjectWord::node(w, p);
        }
        w
    }

    /// Reassociates to group `i..j`, replaces that slice by `new_mid`
    /// (which must have the same object sum), applies `op_scalar`, and
    /// folds back to the left comb.
    pub fn apply_grouped(&mut self, i: usize, j: usize, new_mid: &[usize], op_scalar: usize) {
        let k = self.cat.scalars();
        let a = self.cat.objects();
        assert!(!new_mid.is_empty(), "grouped ops replace with a nonempty slice");
        let before: usize =
            self.leaves[i..j].iter().fold(a.zero(), |acc, &x| a.add(acc, x));
        let after: usize = new_mid.iter().fold(a.zero(), |acc, &x| a.add(acc, x));
        assert_eq!(before, after, "grouped op must preserve the object");
        let w_before = Self::grouped_word(&self.leaves, i, j);
        self.acc = k.sub(self.acc, self.cat.fold_scalar(&w_before));
        let mut new_leaves = self.leaves[..i].to_vec();
        new_leaves.extend_from_slice(new_mid);
        new_leaves.extend_from_slice(&self.leaves[j..]);
        let w_after = Self::grouped_word(&new_leaves, i, i + new_mid.len());
        self.acc = k.add(self.acc, self.cat.fold_scalar(&w_after));
        self.leaves = new_leaves;
        self.acc = k.add(self.acc, op_scalar);
    }

    /// Braids leaves `i` and `i+1`: forward uses `+beta(u, v)`, inverse uses
    /// `-beta(v, u)` where `(u, v)` is the pair before the swap.
    pub fn braid(&mut self, i: usize, forward: bool) {
        let (u, v) = (self.leaves[i], self.leaves[i + 1]);
        let s = if forward {
            self.cat.beta(u, v)
        } else {
            self.cat.scalars().neg(self.cat.beta(v, u))
        };
        self.apply_grouped(i, i + 2, &[v, u], s);
    }

    /// Inserts the unit leaf at position `i` (a unitor move, scalar zero).
    pub fn insert_unit(&mut self, i: usize) {
        if self.leaves.is_empty() {
            self.leaves.push(self.cat.objects().zero());
            return;
        }
        if i > 0 {
            self.apply_grouped(i - 1, i, &[self.leaves[i - 1], 0], 0);
        } else {
            self.apply_grouped(0, 1, &[0, self.leaves[0]], 0);
        }
    }

    /// Drops the unit leaf at position `i`.
    pub fn drop_unit(&mut self, i: usize) {
        assert_eq!(self.leaves[i], self.cat.objects().zero(), "dropping a non-unit leaf");
        if self.leaves.len() == 1 {
            self.leaves.clear();
            return;
        }
        if i > 0 {
            let kept = self.leaves[i - 1];
            self.apply_grouped(i - 1, i + 1, &[kept], 0);
        } else {
            let kept = self.leaves[1];
            self.apply_grouped(0, 2, &[kept], 0);
        }
    }

    /// Inserts the pair `(x, -x)` at position `i` via the coevaluation.
    pub fn pair_create(&mut self, i: usize, x: usize, coev: usize) {
        self.insert_unit(i);
        let neg = self.cat.objects().neg(x);
        self.apply_grouped(i, i + 1, &[x, neg], coev);
    }

    /// Removes the adjacent pair `(-x, x)` at positions `i, i+1` via the
    /// evaluation scalar `ev`.
    pub fn pair_annihilate(&mut self, i: usize, ev: usize) {
        let (u, v) = (self.leaves[i], self.leaves[i + 1]);
        assert_eq!(u, self.cat.objects().neg(v), "annihilating a non-dual pair");
        self.apply_grouped(i, i + 2, &[0], ev);
        self.drop_unit(i);
    }

    /// Canonical pair insertion using the category's chosen duals.
    pub fn pair_create_canonical(&mut self, i: usize, x: usize) {
        self.pair_create(i, x, self.cat.coev_of(x));
    }

    /// Canonical annihilation of `(-x, x)` at `i` using the chosen duals.
    pub fn pair_annihilate_canonical(&mut self, i: usize) {
        let x = self.leaves[i + 1];
        self.pair_annihilate(i, self.cat.ev_of(x));
    }

    /// Canonical annihilation of the reversed pair `(x, -x)` at `i`; this is
    /// the evaluation of the dual object.
    pub fn pair_annihilate_rev_canonical(&mut self, i: usize) {
        let x = self.leaves[i];
        // (x, -x) = (-y, y) with y = -x.
        self.pair_annihilate(i, self.cat.ev_of(self.cat.objects().neg(x)));
    }

    /// Charges the cost of normalizing a source word into the current flat
    /// state; call first, with the word whose leaves match the initial ones.
    pub fn charge_from(&mut self, source: &ObjectWord) {
        assert_eq!(source.leaves(), self.leaves, "source word has different leaves");
        self.acc = self.cat.scalars().add(self.acc, self.cat.fold_scalar(source));
    }

    /// Discharges into a target word shape: the cost of un-normalizing from
    /// the flat state to `target`. Call last.
    pub fn discharge_to(&mut self, target: &ObjectWord) {
        assert_eq!(target.leaves(), self.leaves, "target word has different leaves");
        self.acc = self.cat.scalars().sub(self.acc, self.cat.fold_scalar(target));
    }

    /// Finishes the evaluation, asserting the expected final leaf list.
    pub fn finish(self, expected: &[usize]) -> usize {
        assert_eq!(self.leaves, expected, "evaluator ended on an unexpected word");
        self.acc
    }

    pub fn into_scalar(self) -> usize {
        self.acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::FiniteAbelianGroup;

    fn semion() -> PointedBraidedCategory {
        // A = Z/2, K = Z/4, alpha(1,1,1) = 2, beta(1,1) = 1.
        let a = FiniteAbelianGroup::cyclic(2);
        let k = FiniteAbelianGroup::cyclic(4);
        let mut alpha = vec![0; 8];
        alpha[7] = 2;
        let mut beta = vec![0; 4];
        beta[3] = 1;
        PointedBraidedCategory::new(a, k, alpha, beta).unwrap()
    }

    #[test]
    fn trivial_category_passes_everything() {
        let cat = PointedBraidedCategory::trivial(
            FiniteAbelianGroup::cyclic(3),
            FiniteAbelianGroup::cyclic(3),
        );
        assert!(cat.check_pentagon(ReportOptions::All).passed());
        assert!(cat.check_hexagons(ReportOptions::All).passed());
    }

    #[test]
    fn pentagon_mod_two_versus_mod_four() {
        let a = FiniteAbelianGroup::cyclic(2);
        // alpha(1,1,1) = 1 over K = Z/2 passes: 2*1 = 0.
        let mut alpha = vec![0; 8];
        alpha[7] = 1;
        let cat = PointedBraidedCategory::new_unvalidated(
            a.clone(),
            FiniteAbelianGroup::cyclic(2),
            alpha.clone(),
            vec![0; 4],
        )
        .unwrap();
        assert!(cat.check_pentagon(ReportOptions::All).passed());
        // Same table over K = Z/4 fails at (1,1,1,1) with defect 2.
        let cat4 = PointedBraidedCategory::new_unvalidated(
            a,
            FiniteAbelianGroup::cyclic(4),
            alpha,
            vec![0; 4],
        )
        .unwrap();
        let report = cat4.check_pentagon(ReportOptions::All);
        assert_eq!(report.total_failures(), 1);
        let f = &report.failures()[0];
        assert_eq!(f.witness, vec![1, 1, 1, 1]);
        assert_eq!(f.defect, Some(2));
    }

    #[test]
    fn hexagons_force_bilinearity_when_alpha_vanishes() {
        let a = FiniteAbelianGroup::cyclic(2);
        let k = FiniteAbelianGroup::cyclic(4);
        let mut beta = vec![0; 4];
        beta[3] = 1;
        let cat =
            PointedBraidedCategory::new_unvalidated(a, k, vec![0; 8], beta).unwrap();
        let report = cat.check_hexagons(ReportOptions::All);
        assert!(!report.passed());
    }

    #[test]
    fn semion_passes_both_hexagons() {
        let cat = semion();
        assert!(cat.check_pentagon(ReportOptions::All).passed());
        assert!(cat.check_hexagons(ReportOptions::All).passed());
    }

    #[test]
    fn reassociate_identity_and_single_move() {
        let cat = semion();
        let w = ObjectWord::node(
            ObjectWord::node(ObjectWord::Leaf(1), ObjectWord::Leaf(1)),
            ObjectWord::Leaf(1),
        );
        assert_eq!(cat.reassociate(&w, &w).unwrap(), 0);
        let t = ObjectWord::node(
            ObjectWord::Leaf(1),
            ObjectWord::node(ObjectWord::Leaf(1), ObjectWord::Leaf(1)),
        );
        // ((x.y).z) -> (x.(y.z)) is exactly alpha(x,y,z).
        assert_eq!(cat.reassociate(&w, &t).unwrap(), cat.alpha(1, 1, 1));
        let bad = ObjectWord::left_comb(&[1, 0, 1]);
        assert!(matches!(cat.reassociate(&w, &bad), Err(PointedError::LeafMismatch)));
    }

    #[test]
    fn pentagon_paths_agree_for_semion_four_leaves() {
        let cat = semion();
        for leaves in [[1, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]] {
            let w = ObjectWord::left_comb(&leaves);
            assert!(cat.all_paths_consistent(&w));
        }
    }

    #[test]
    fn duals_exist_with_zero_snakes() {
        let triv = PointedBraidedCategory::trivial(
            FiniteAbelianGroup::cyclic(4),
            FiniteAbelianGroup::cyclic(2),
        );
        for x in 0..4 {
            let d = right_dual(&triv, x).unwrap();
            assert_eq!(d.dual, triv.objects().neg(x));
            assert_eq!((d.ev, d.coev), (0, 0));
            assert!(check_snake(&triv, &d));
        }
        let cat = semion();
        let d = right_dual(&cat, 1).unwrap();
        assert_eq!(d.dual, 1);
        assert_eq!(d.ev, 2); // -alpha(1,1,1) = -2 = 2 in Z/4
        assert!(check_snake(&cat, &d));
    }

    #[test]
    fn evaluator_inverse_moves_cancel() {
        let cat = semion();
        // braid forward then backward leaves no residue, fillers included.
        let mut ev = Evaluator::new(&cat, vec![1, 1, 1]);
        ev.braid(1, true);
        let forward = ev.leaves().to_vec();
        assert_eq!(forward, vec![1, 1, 1]);
        ev.braid(1, false);
        assert_eq!(ev.finish(&[1, 1, 1]), 0);
        // unit insertion and removal round-trips to zero.
        let mut ev = Evaluator::new(&cat, vec![1, 1]);
        ev.insert_unit(1);
        assert_eq!(ev.leaves(), &[1, 0, 1]);
        ev.drop_unit(1);
        assert_eq!(ev.finish(&[1, 1]), 0);
    }
}
