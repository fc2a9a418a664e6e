//! Buchberger's algorithm, normal forms, lead-term ideals, and a desk-scale
//! smoothness check via the Jacobian criterion.
//!
//! The implementation is deliberately plain: normal selection strategy
//! (smallest lcm degree first, ties broken by the monomial order on lcms),
//! the product criterion for skipping coprime pairs, and full inter-reduction
//! at the end. Output is the reduced Groebner basis, which is unique for a
//! fixed ideal and order, so results are deterministic and independent of the
//! generator list order.

use crate::poly::{IdealPresentation, Monomial, MonomialOrder, Polynomial};
use num_rational::BigRational;
use num_traits::One;

use std::fmt;

/// Caps on the Buchberger loop. Exceeding a cap is a clean error, never a
/// wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct ReductionBudget {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: u64,
    /// Maximum total degree of any intermediate polynomial.
    pub max_degree: u32,
}

impl Default for ReductionBudget {
    fn default() -> Self {
        ReductionBudget {
            max_pairs: 100_000,
            max_degree: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerError {
    PairBudgetExceeded { max_pairs: u64 },
    DegreeBudgetExceeded { max_degree: u32, reached: u32 },
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::PairBudgetExceeded { max_pairs } => {
                write!(
                    f,
                    "S-pair budget exceeded ({max_pairs} pairs); input too large for desk scale"
                )
            }
            GroebnerError::DegreeBudgetExceeded {
                max_degree,
                reached,
            } => {
                write!(
                    f,
                    "degree budget exceeded (cap {max_degree}, reached {reached})"
                )
            }
        }
    }
}

impl std::error::Error for GroebnerError {}

/// A reduced Groebner basis: monic, inter-reduced elements sorted by lead
/// monomial (ascending in the basis order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn lead_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|g| {
            g.lead_monomial(self.order)
                .expect("basis elements are nonzero")
        })
    }

    /// Buchberger's criterion: every S-polynomial of two elements reduces to
    /// zero modulo the basis.
    pub fn buchberger_criterion(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j], self.order);
                if !normal_form(&s, self).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Minimal generating monomials of a monomial ideal: an antichain under
/// divisibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdealGens {
    gens: Vec<Monomial>,
}

impl MonomialIdealGens {
    /// Keeps only divisibility-minimal monomials and sorts them.
    pub fn new(mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|m| !gens.iter().any(|other| *other != **m && other.divides(m)))
            .cloned()
            .collect();
        MonomialIdealGens { gens: minimal }
    }

    pub fn empty() -> Self {
        MonomialIdealGens { gens: Vec::new() }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains_one(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }
}

/// Full remainder of p on division by the basis: no term of the result is
/// divisible by any lead monomial of gb. Linear in p.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let order = gb.order;
    let mut rem = p.clone();
    'outer: loop {
        // Find the greatest reducible term; terms below it are untouched this
        // round, so scanning from the top keeps the loop finite.
        let mut terms: Vec<(Monomial, BigRational)> =
            rem.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        for (m, c) in terms {
            for g in &gb.elements {
                let lm = g.lead_monomial(order).unwrap();
                if lm.divides(&m) {
                    let quot = lm.quotient_into(&m);
                    // g is monic, so the reducer is (c·quot)·g.
                    rem = rem.sub(&g.mul_term(&quot, &c));
                    continue 'outer;
                }
            }
        }
        return rem;
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (lmf, lcf) = f.lead_term(order).unwrap();
    let (lmg, lcg) = g.lead_term(order).unwrap();
    let lcm = lmf.lcm(lmg);
    let uf = lmf.quotient_into(&lcm);
    let ug = lmg.quotient_into(&lcm);
    let cf = BigRational::one() / lcf;
    let cg = BigRational::one() / lcg;
    f.mul_term(&uf, &cf).sub(&g.mul_term(&ug, &cg))
}

/// Reduces each element modulo the others and drops redundant ones, producing
/// the unique reduced basis (sorted by lead monomial).
fn inter_reduce(mut elems: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    elems.retain(|g| !g.is_zero());
    // Minimalize: drop elements whose lead monomial is divisible by the lead
    // monomial of another kept element.
    elems.sort_by(|a, b| {
        order.cmp(
            a.lead_monomial(order).unwrap(),
            b.lead_monomial(order).unwrap(),
        )
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in &elems {
        let lm = g.lead_monomial(order).unwrap();
        if !minimal
            .iter()
            .any(|h| h.lead_monomial(order).unwrap().divides(lm))
        {
            minimal.push(g.clone());
        }
    }
    // Tail-reduce each element modulo the others until stable.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others = GroebnerBasis {
                order,
                elements: minimal
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, g)| g.clone())
                    .collect(),
            };
            let reduced = normal_form(&minimal[i], &others).monic(order);
            if reduced != minimal[i] {
                minimal[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|g| !g.is_zero());
    minimal.sort_by(|a, b| {
        order.cmp(
            a.lead_monomial(order).unwrap(),
            b.lead_monomial(order).unwrap(),
        )
    });
    minimal
}

/// Buchberger's algorithm. Returns the reduced Groebner basis of the ideal
/// generated by the presentation, deterministically for fixed input and order.
pub fn buchberger(
    ideal: &IdealPresentation,
    order: MonomialOrder,
    budget: &ReductionBudget,
) -> Result<GroebnerBasis, GroebnerError> {
    // Inter-reducing here would be unsound (dropping by lead divisibility can
    // change the ideal for non-basis inputs); Buchberger absorbs redundancy
    // and the final inter-reduction produces the unique reduced basis.
    let mut basis: Vec<Polynomial> = ideal.generators().iter().map(|g| g.monic(order)).collect();
    basis.sort_by(|a, b| {
        order.cmp(
            a.lead_monomial(order).unwrap(),
            b.lead_monomial(order).unwrap(),
        )
    });
    basis.dedup();
    // Pair queue keyed by (lcm degree, lcm monomial, indices); the normal
    // strategy pops the smallest key.
    let mut pairs: Vec<(u32, Monomial, usize, usize)> = Vec::new();
    let add_pairs =
        |pairs: &mut Vec<(u32, Monomial, usize, usize)>, basis: &[Polynomial], j: usize| {
            for i in 0..j {
                let lmi = basis[i].lead_monomial(order).unwrap();
                let lmj = basis[j].lead_monomial(order).unwrap();
                if lmi.is_coprime(lmj) {
                    continue; // product criterion
                }
                let lcm = lmi.lcm(lmj);
                pairs.push((lcm.total_degree(), lcm, i, j));
            }
        };
    for j in 0..basis.len() {
        add_pairs(&mut pairs, &basis, j);
    }
    let mut reduced_count: u64 = 0;
    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, (da, ma, ia, ja)), (_, (db, mb, ib, jb))| {
                da.cmp(db)
                    .then_with(|| order.cmp(ma, mb))
                    .then_with(|| (ia, ja).cmp(&(ib, jb)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (_, _, i, j) = pairs.swap_remove(best);
        reduced_count += 1;
        if reduced_count > budget.max_pairs {
            return Err(GroebnerError::PairBudgetExceeded {
                max_pairs: budget.max_pairs,
            });
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        if let Some(deg) = s.total_degree() {
            if deg > budget.max_degree {
                return Err(GroebnerError::DegreeBudgetExceeded {
                    max_degree: budget.max_degree,
                    reached: deg,
                });
            }
        }
        let current = GroebnerBasis {
            order,
            elements: basis.clone(),
        };
        let h = normal_form(&s, &current);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(order);
        basis.push(h);
        add_pairs(&mut pairs, &basis, basis.len() - 1);
    }
    Ok(GroebnerBasis {
        order,
        elements: inter_reduce(basis, order),
    })
}

/// Minimal monomial generators of the initial ideal of gb.
pub fn lead_term_ideal(gb: &GroebnerBasis) -> MonomialIdealGens {
    MonomialIdealGens::new(gb.lead_monomials().cloned().collect())
}

/// Verdict of the Jacobian criterion at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    Smooth,
    Singular,
    /// Resource budget exceeded; the pipeline proceeds on user assertion.
    Indeterminate,
}

impl fmt::Display for Smoothness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Smoothness::Smooth => write!(f, "smooth"),
            Smoothness::Singular => write!(f, "singular"),
            Smoothness::Indeterminate => write!(f, "indeterminate"),
        }
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
fn determinant(matrix: &[Vec<&Polynomial>], nvars: usize) -> Polynomial {
    let n = matrix.len();
    if n == 1 {
        return matrix[0][0].clone();
    }
    let mut det = Polynomial::zero(nvars);
    for (col, entry) in matrix[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<&Polynomial>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| *p)
                    .collect()
            })
            .collect();
        let cofactor = entry.mul(&determinant(&minor, nvars));
        det = if col % 2 == 0 {
            det.add(&cofactor)
        } else {
            det.sub(&cofactor)
        };
    }
    det
}

/// All c-subsets of 0..n in lexicographic order.
fn subsets(n: usize, c: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, c: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == c {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, c, cur, out);
            cur.pop();
        }
    }
    rec(0, n, c, &mut cur, &mut out);
    out
}

/// The generators of I plus all c x c minors of the Jacobian matrix of the
/// generators, where c = codim. The vanishing locus is the singular locus of
/// the (assumed equidimensional) scheme.
pub fn jacobian_minor_ideal(
    ideal: &IdealPresentation,
    codim: usize,
) -> Result<IdealPresentation, crate::poly::PolyError> {
    let nvars = ideal.nvars();
    let jac: Vec<Vec<Polynomial>> = ideal
        .generators()
        .iter()
        .map(|g| (0..nvars).map(|i| g.partial_derivative(i)).collect())
        .collect();
    let mut gens: Vec<Polynomial> = ideal.generators().to_vec();
    for rows in subsets(jac.len(), codim) {
        for cols in subsets(nvars, codim) {
            let m: Vec<Vec<&Polynomial>> = rows
                .iter()
                .map(|&ri| cols.iter().map(|&ci| &jac[ri][ci]).collect())
                .collect();
            let d = determinant(&m, nvars);
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    IdealPresentation::new(ideal.r(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(r: usize, gens: &[&str]) -> IdealPresentation {
        IdealPresentation::new(
            r,
            gens.iter()
                .map(|s| parse_polynomial(s, r).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn twisted_cubic() -> IdealPresentation {
        ideal(3, &["x0x2 - x1^2", "x0x3 - x1x2", "x1x3 - x2^2"])
    }

    #[test]
    fn monomials_are_their_own_basis() {
        let gb = buchberger(
            &ideal(1, &["x0", "x1"]),
            MonomialOrder::GrevLex,
            &ReductionBudget::default(),
        )
        .unwrap();
        assert_eq!(gb.elements().len(), 2);
        assert_eq!(gb.elements()[0], parse_polynomial("x1", 1).unwrap());
        assert_eq!(gb.elements()[1], parse_polynomial("x0", 1).unwrap());
    }

    #[test]
    fn twisted_cubic_is_already_reduced() {
        // The three generators form the reduced basis for either order; only
        // the monic scaling differs.
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = buchberger(&twisted_cubic(), order, &ReductionBudget::default()).unwrap();
            assert_eq!(gb.elements().len(), 3);
            for g in gb.elements() {
                assert!(twisted_cubic()
                    .generators()
                    .iter()
                    .any(|h| h.monic(order) == *g || h.neg().monic(order) == *g));
            }
        }
    }

    #[test]
    fn sum_and_difference_of_squares() {
        // (x0^2 - x1^2, x0^2 + x1^2) = (x0^2, x1^2)
        let gb = buchberger(
            &ideal(1, &["x0^2 - x1^2", "x0^2 + x1^2"]),
            MonomialOrder::GrevLex,
            &ReductionBudget::default(),
        )
        .unwrap();
        let lead = lead_term_ideal(&gb);
        assert_eq!(
            lead.gens(),
            &[Monomial::new(vec![0, 2]), Monomial::new(vec![2, 0])]
        );
        assert_eq!(gb.elements().len(), 2);
    }

    #[test]
    fn normal_form_examples() {
        let gb = buchberger(
            &ideal(1, &["x0"]),
            MonomialOrder::GrevLex,
            &ReductionBudget::default(),
        )
        .unwrap();
        assert!(normal_form(&parse_polynomial("x0^2", 1).unwrap(), &gb).is_zero());
        assert_eq!(
            normal_form(&parse_polynomial("x1", 1).unwrap(), &gb),
            parse_polynomial("x1", 1).unwrap()
        );
    }

    #[test]
    fn normal_form_single_step_on_twisted_cubic() {
        // Under lex, x0x2 is the lead of the first generator, so x0x2
        // reduces to x1^2 in one step.
        let gb = buchberger(
            &twisted_cubic(),
            MonomialOrder::Lex,
            &ReductionBudget::default(),
        )
        .unwrap();
        assert_eq!(
            normal_form(&parse_polynomial("x0x2", 3).unwrap(), &gb),
            parse_polynomial("x1^2", 3).unwrap()
        );
        // Under grevlex, x1^2 is the lead instead and x0x2 is a standard
        // monomial, hence its own normal form.
        let gb = buchberger(
            &twisted_cubic(),
            MonomialOrder::GrevLex,
            &ReductionBudget::default(),
        )
        .unwrap();
        assert_eq!(
            normal_form(&parse_polynomial("x0x2", 3).unwrap(), &gb),
            parse_polynomial("x0x2", 3).unwrap()
        );
    }

    #[test]
    fn lead_term_ideal_of_twisted_cubic() {
        // Lex: the generators lead with their first-variable terms.
        let gb = buchberger(
            &twisted_cubic(),
            MonomialOrder::Lex,
            &ReductionBudget::default(),
        )
        .unwrap();
        let mut got = lead_term_ideal(&gb).gens().to_vec();
        got.sort();
        assert_eq!(
            got,
            vec![
                Monomial::new(vec![0, 1, 0, 1]), // x1x3
                Monomial::new(vec![1, 0, 0, 1]), // x0x3
                Monomial::new(vec![1, 0, 1, 0]), // x0x2
            ]
        );
        // Grevlex: higher exponents of late variables sort a monomial down,
        // so the x1^2, x1x2, x2^2 terms lead instead.
        let gb = buchberger(
            &twisted_cubic(),
            MonomialOrder::GrevLex,
            &ReductionBudget::default(),
        )
        .unwrap();
        let mut got = lead_term_ideal(&gb).gens().to_vec();
        got.sort();
        assert_eq!(
            got,
            vec![
                Monomial::new(vec![0, 0, 2, 0]), // x2^2
                Monomial::new(vec![0, 1, 1, 0]), // x1x2
                Monomial::new(vec![0, 2, 0, 0]), // x1^2
            ]
        );
    }

    #[test]
    fn antichain_is_kept() {
        let gens = MonomialIdealGens::new(vec![
            Monomial::new(vec![2, 0]),
            Monomial::new(vec![1, 1]),
            Monomial::new(vec![0, 3]),
        ]);
        assert_eq!(gens.gens().len(), 3);
    }

    #[test]
    fn antichain_drops_multiples() {
        let gens =
            MonomialIdealGens::new(vec![Monomial::new(vec![1, 0]), Monomial::new(vec![1, 1])]);
        assert_eq!(gens.gens(), &[Monomial::new(vec![1, 0])]);
    }

    #[test]
    fn s_pairs_of_result_reduce_to_zero() {
        for input in [
            ideal(3, &["x0x2 - x1^2", "x0x3 - x1x2", "x1x3 - x2^2"]),
            ideal(1, &["x0^2 - x1^2", "x0^2 + x1^2"]),
            ideal(
                3,
                &["x0^2 + x1^2 + x2^2 + x3^2", "x0^3 + x1^3 + x2^3 + x3^3"],
            ),
        ] {
            for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
                let gb = buchberger(&input, order, &ReductionBudget::default()).unwrap();
                let elems = gb.elements();
                for i in 0..elems.len() {
                    for j in (i + 1)..elems.len() {
                        let s = s_polynomial(&elems[i], &elems[j], order);
                        assert!(
                            normal_form(&s, &gb).is_zero(),
                            "S-pair ({i},{j}) did not reduce to zero"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn basis_independent_of_generator_order() {
        let a = ideal(3, &["x0x2 - x1^2", "x0x3 - x1x2", "x1x3 - x2^2"]);
        let b = ideal(3, &["x1x3 - x2^2", "x0x2 - x1^2", "x0x3 - x1x2"]);
        let gb_a = buchberger(&a, MonomialOrder::GrevLex, &ReductionBudget::default()).unwrap();
        let gb_b = buchberger(&b, MonomialOrder::GrevLex, &ReductionBudget::default()).unwrap();
        assert_eq!(gb_a, gb_b);
    }

    #[test]
    fn ideal_membership_via_normal_form() {
        let input = ideal(3, &["x0x2 - x1^2", "x0x3 - x1x2", "x1x3 - x2^2"]);
        let gb = buchberger(&input, MonomialOrder::GrevLex, &ReductionBudget::default()).unwrap();
        // Random-looking combinations sum into the ideal.
        let g = input.generators();
        let mult0 = parse_polynomial("x0 + 2x3", 3).unwrap();
        let mult1 = parse_polynomial("x1 - x2", 3).unwrap();
        let combo = g[0].mul(&mult0).add(&g[1].mul(&mult1)).add(&g[2]);
        assert!(normal_form(&combo, &gb).is_zero());
        // And something outside stays nonzero.
        assert!(!normal_form(&parse_polynomial("x0", 3).unwrap(), &gb).is_zero());
    }

    #[test]
    fn pair_budget_is_enforced() {
        let input = ideal(
            3,
            &["x0^2 + x1^2 + x2^2 + x3^2", "x0^3 + x1^3 + x2^3 + x3^3"],
        );
        let tiny = ReductionBudget {
            max_pairs: 0,
            max_degree: 64,
        };
        assert_eq!(
            buchberger(&input, MonomialOrder::GrevLex, &tiny),
            Err(GroebnerError::PairBudgetExceeded { max_pairs: 0 })
        );
    }
}
