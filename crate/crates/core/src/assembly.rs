//! Strong semilattices of semigroups `S(Y; S_α; φ_{α,β})` with product
//! `a_α b_β = (a_α φ_{α,αβ})(b_β φ_{β,αβ})`, their extraction from a
//! semilattice of monoids, and the assembly of inverse hulls vertex by
//! vertex.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::format::{dense_map, parse_map};
use crate::hull::{has_lc, inverse_hull, InverseHull};
use crate::inverse::{recognize_inverse, FiniteInverse};
use crate::iorder::SubsetEmbedding;
use crate::iso::is_morphism;
use crate::lifting::{
    hull_embedding, is_lc_preserving, iso_over_s, lift_morphism, transport_to_hulls, IsoOutcome,
    LiftOutcome,
};
use crate::relations::{left_ample, r_star};
use crate::table::{Elem, FiniteSemigroup};

/// A semilattice `Y` with a semigroup at each vertex and a morphism for
/// each strict pair `α > β`. Identity connectors are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilatticeDiagram {
    pub y: FiniteSemigroup,
    pub components: Vec<FiniteSemigroup>,
    /// `(α, β) ↦ φ_{α,β}` for `α > β`, as a map on local indices.
    pub connectors: BTreeMap<(usize, usize), Vec<Elem>>,
}

impl SemilatticeDiagram {
    /// `α ≥ β` in `Y`, i.e. `αβ = β`.
    pub fn geq(&self, alpha: usize, beta: usize) -> bool {
        self.y.mul(alpha, beta) == beta
    }

    /// `φ_{α,β}`, the identity when `α = β`.
    pub fn connector(&self, alpha: usize, beta: usize) -> Option<Vec<Elem>> {
        if alpha == beta {
            Some(self.components[alpha].elements().collect())
        } else {
            self.connectors.get(&(alpha, beta)).cloned()
        }
    }

    /// Checks that `Y` is a semilattice, each connector is a morphism, and
    /// `φ_{α,β}φ_{β,γ} = φ_{α,γ}` for `α ≥ β ≥ γ`.
    pub fn validate(&self) -> Result<()> {
        let y = &self.y;
        if !y.is_semilattice() {
            return Err(Error::input("Y is not a semilattice"));
        }
        if self.components.len() != y.order() {
            return Err(Error::input(format!(
                "{} components for {} vertices",
                self.components.len(),
                y.order()
            )));
        }
        for &(a, b) in self.connectors.keys() {
            if a >= y.order() || b >= y.order() || a == b || !self.geq(a, b) {
                return Err(Error::input(format!(
                    "connector ({a},{b}) is not for a strict pair α > β"
                )));
            }
        }
        for a in y.elements() {
            for b in y.elements().filter(|&b| b != a && self.geq(a, b)) {
                let phi = self
                    .connector(a, b)
                    .ok_or_else(|| Error::input(format!("missing connector φ_({a},{b})")))?;
                let (sa, sb) = (&self.components[a], &self.components[b]);
                if phi.len() != sa.order() || phi.iter().any(|&x| x >= sb.order()) {
                    return Err(Error::input(format!(
                        "φ_({a},{b}) does not map S_{a} into S_{b}"
                    )));
                }
                if !is_morphism(sa, sb, &phi) {
                    return Err(Error::input(format!("φ_({a},{b}) is not a morphism")));
                }
            }
        }
        for a in y.elements() {
            for b in y.elements().filter(|&b| self.geq(a, b)) {
                for c in y.elements().filter(|&c| self.geq(b, c)) {
                    let ab = self.connector(a, b).expect("validated");
                    let bc = self.connector(b, c).expect("validated");
                    let ac = self.connector(a, c).expect("validated");
                    if (0..ab.len()).any(|x| bc[ab[x]] != ac[x]) {
                        return Err(Error::input(format!(
                            "φ_({a},{b})φ_({b},{c}) ≠ φ_({a},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Reads a diagram file. Lines are
    /// `semilattice <file>`, `component <vertex> <file>` and
    /// `connector <alpha> <beta> <map-file>`; paths are relative to the
    /// diagram file.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
        let dir = path.parent().unwrap_or(Path::new("."));
        let read = |f: &str| {
            let p = dir.join(f);
            std::fs::read_to_string(&p).map_err(|e| Error::input(format!("{}: {e}", p.display())))
        };
        let mut y = None;
        let mut components: BTreeMap<usize, FiniteSemigroup> = BTreeMap::new();
        let mut raw_connectors = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let idx = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::input(format!("line {}: bad vertex {s:?}", n + 1)))
            };
            match parts.as_slice() {
                ["semilattice", f] => y = Some(FiniteSemigroup::parse(&read(f)?)?),
                ["component", v, f] => {
                    components.insert(idx(v)?, FiniteSemigroup::parse(&read(f)?)?);
                }
                ["connector", a, b, f] => {
                    raw_connectors.push((idx(a)?, idx(b)?, parse_map(&read(f)?)?))
                }
                _ => {
                    return Err(Error::input(format!(
                        "line {}: unrecognised {line:?}",
                        n + 1
                    )))
                }
            }
        }
        let y = y.ok_or_else(|| Error::input("no semilattice line"))?;
        let components: Vec<FiniteSemigroup> = (0..y.order())
            .map(|v| {
                components
                    .remove(&v)
                    .ok_or_else(|| Error::input(format!("no component for vertex {v}")))
            })
            .collect::<Result<_>>()?;
        let mut connectors = BTreeMap::new();
        for (a, b, m) in raw_connectors {
            let n = components
                .get(a)
                .ok_or_else(|| Error::input(format!("connector from unknown vertex {a}")))?
                .order();
            connectors.insert((a, b), dense_map(&m, n)?);
        }
        let d = SemilatticeDiagram {
            y,
            components,
            connectors,
        };
        d.validate()?;
        Ok(d)
    }
}

/// The semigroup of a diagram, with each element's vertex and local index.
/// Vertices appear in the order of `Y`, each component contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongSemilattice {
    pub semigroup: FiniteSemigroup,
    pub vertex_of: Vec<usize>,
    pub local_of: Vec<Elem>,
    pub offset: Vec<usize>,
}

impl StrongSemilattice {
    pub fn global(&self, vertex: usize, local: Elem) -> Elem {
        self.offset[vertex] + local
    }

    /// Global indices of the elements of `S_α`.
    pub fn block(&self, vertex: usize) -> Vec<Elem> {
        (0..self.semigroup.order())
            .filter(|&x| self.vertex_of[x] == vertex)
            .collect()
    }
}

pub fn build_strong_semilattice(d: &SemilatticeDiagram) -> Result<StrongSemilattice> {
    d.validate()?;
    let mut offset = Vec::with_capacity(d.components.len());
    let mut vertex_of = Vec::new();
    let mut local_of = Vec::new();
    for (v, c) in d.components.iter().enumerate() {
        offset.push(vertex_of.len());
        for x in c.elements() {
            vertex_of.push(v);
            local_of.push(x);
        }
    }
    let n = vertex_of.len();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for z in 0..n {
            let (a, b) = (vertex_of[x], vertex_of[z]);
            let g = d.y.mul(a, b);
            let fa = d.connector(a, g).expect("validated");
            let fb = d.connector(b, g).expect("validated");
            let p = d.components[g].mul(fa[local_of[x]], fb[local_of[z]]);
            table.push(offset[g] + p);
        }
    }
    let semigroup = FiniteSemigroup::from_flat_unchecked(n, table);
    if let Some((a, b, c)) = semigroup.non_associative_triple() {
        return Err(Error::consistency(format!(
            "strong semilattice product is not associative at ({a},{b},{c})"
        )));
    }
    Ok(StrongSemilattice {
        semigroup,
        vertex_of,
        local_of,
        offset,
    })
}

/// A diagram recovered from a semilattice of monoids.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub diagram: SemilatticeDiagram,
    /// `identities[α]` is `e_α` in `P`.
    pub identities: Vec<Elem>,
    /// `carrier[x]` is the element of `P` at position `x` of the rebuilt
    /// strong semilattice.
    pub carrier: Vec<Elem>,
}

/// Recovers the strong structure of `P = S(Y; M_α)` when each block is a
/// monoid and the identities `e_α` form a subsemigroup: the identities are
/// central and `φ_{α,β}(a) = a e_β`. The rebuilt product must equal `P`.
pub fn extract_strong_structure(p: &FiniteSemigroup, blocks: &[Vec<Elem>]) -> Result<Extraction> {
    let k = blocks.len();
    let mut block_of = vec![usize::MAX; p.order()];
    for (v, b) in blocks.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::input(format!("block {v} is empty")));
        }
        for &x in b {
            if x >= p.order() || block_of[x] != usize::MAX {
                return Err(Error::input(format!(
                    "element {x} is out of range or repeated"
                )));
            }
            block_of[x] = v;
        }
    }
    if let Some(x) = block_of.iter().position(|&v| v == usize::MAX) {
        return Err(Error::input(format!("element {x} is in no block")));
    }
    let mut y_table = vec![usize::MAX; k * k];
    for x in p.elements() {
        for z in p.elements() {
            let (a, b, g) = (block_of[x], block_of[z], block_of[p.mul(x, z)]);
            let cell = &mut y_table[a * k + b];
            if *cell == usize::MAX {
                *cell = g;
            } else if *cell != g {
                return Err(Error::precondition(format!(
                    "blocks {a}·{b} meet both {} and {g}",
                    *cell
                )));
            }
        }
    }
    let y = FiniteSemigroup::from_flat_unchecked(k, y_table);
    if !y.is_semilattice() || y.non_associative_triple().is_some() {
        return Err(Error::precondition(
            "blocks do not form a semilattice of subsemigroups",
        ));
    }
    let mut components = Vec::with_capacity(k);
    let mut identities = Vec::with_capacity(k);
    for (v, b) in blocks.iter().enumerate() {
        let (m, _) = p.restrict(b)?;
        let e = m
            .identity()
            .ok_or_else(|| Error::precondition(format!("block {v} is not a monoid")))?;
        identities.push(b[e]);
        components.push(m);
    }
    if !p.is_closed(&identities) {
        return Err(Error::precondition(
            "the identities do not form a subsemigroup",
        ));
    }
    for &e in &identities {
        if let Some(x) = p.elements().find(|&x| p.mul(e, x) != p.mul(x, e)) {
            return Err(Error::consistency(format!(
                "identity {e} is not central: fails with {x}"
            )));
        }
    }
    let mut connectors = BTreeMap::new();
    for a in 0..k {
        for b in (0..k).filter(|&b| b != a && y.mul(a, b) == b) {
            let phi: Vec<Elem> = blocks[a]
                .iter()
                .map(|&x| {
                    let img = p.mul(x, identities[b]);
                    blocks[b]
                        .iter()
                        .position(|&z| z == img)
                        .expect("a e_β lies in M_β")
                })
                .collect();
            connectors.insert((a, b), phi);
        }
    }
    let diagram = SemilatticeDiagram {
        y,
        components,
        connectors,
    };
    let built = build_strong_semilattice(&diagram)?;
    let carrier: Vec<Elem> = blocks.iter().flatten().copied().collect();
    for x in built.semigroup.elements() {
        for z in built.semigroup.elements() {
            if carrier[built.semigroup.mul(x, z)] != p.mul(carrier[x], carrier[z]) {
                return Err(Error::consistency(format!(
                    "rebuilt product differs from P at ({}, {})",
                    carrier[x], carrier[z]
                )));
            }
        }
    }
    Ok(Extraction {
        diagram,
        identities,
        carrier,
    })
}

/// Facts about a strong semilattice of left ample semigroups with
/// (2,1)-morphism connectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmpleStrongReport {
    pub left_ample: bool,
    /// `R*` on `S` is the union of the components' `R*`.
    pub rstar_componentwise: bool,
    /// With every component satisfying (LC): (`S` has (LC), every connector
    /// is (LC)-preserving). Both sides always agree.
    pub lc: Option<(bool, bool)>,
}

fn require_ample_diagram(d: &SemilatticeDiagram) -> Result<()> {
    d.validate()?;
    let pluses: Vec<Vec<Elem>> = d
        .components
        .iter()
        .enumerate()
        .map(|(v, c)| {
            left_ample(c)
                .map(|la| la.plus)
                .map_err(|f| Error::precondition(format!("component {v} is not left ample: {f}")))
        })
        .collect::<Result<_>>()?;
    for (&(a, b), phi) in &d.connectors {
        if let Some(x) = d.components[a]
            .elements()
            .find(|&x| phi[pluses[a][x]] != pluses[b][phi[x]])
        {
            return Err(Error::precondition(format!(
                "φ_({a},{b}) does not preserve ⁺ at {x}"
            )));
        }
    }
    Ok(())
}

pub fn strong_semilattice_ample_check(d: &SemilatticeDiagram) -> Result<AmpleStrongReport> {
    require_ample_diagram(d)?;
    let s = build_strong_semilattice(d)?;
    let st = &s.semigroup;
    if let Err(f) = left_ample(st) {
        return Err(Error::consistency(format!(
            "assembled S is not left ample: {f}"
        )));
    }
    let rs = r_star(st);
    let local_rs: Vec<_> = d.components.iter().map(r_star).collect();
    for x in st.elements() {
        for z in st.elements() {
            let (a, b) = (s.vertex_of[x], s.vertex_of[z]);
            let componentwise = a == b && local_rs[a].contains(s.local_of[x], s.local_of[z]);
            if rs.contains(x, z) != componentwise {
                return Err(Error::consistency(format!(
                    "R* on S is not componentwise at ({x}, {z})"
                )));
            }
        }
    }
    let lc = if d.components.iter().all(has_lc) {
        let s_lc = has_lc(st);
        let mut all_preserving = true;
        for (&(a, b), phi) in &d.connectors {
            if !is_lc_preserving(&d.components[a], &d.components[b], phi)?.holds {
                all_preserving = false;
            }
        }
        if s_lc != all_preserving {
            return Err(Error::consistency(format!(
                "S has (LC) = {s_lc} but connectors (LC)-preserving = {all_preserving}"
            )));
        }
        Some((s_lc, all_preserving))
    } else {
        None
    };
    Ok(AmpleStrongReport {
        left_ample: true,
        rstar_componentwise: true,
        lc,
    })
}

/// The strong semilattice of the components' inverse hulls, with lifted
/// connectors, shown isomorphic to `Σ(S)` over `S`.
#[derive(Clone, Debug)]
pub struct HullAssembly {
    pub s: StrongSemilattice,
    pub hulls: Vec<InverseHull>,
    pub q_diagram: SemilatticeDiagram,
    pub q: StrongSemilattice,
    /// `s_in_q[x]` is the element of `Q` representing `x ∈ S`.
    pub s_in_q: Vec<Elem>,
    pub sigma: InverseHull,
    /// `iso[q]` is the image in `Σ(S)` of `q ∈ Q`.
    pub iso: Vec<Elem>,
}

fn stage(name: &str, e: Error) -> Error {
    match e {
        Error::Consistency(m) => Error::consistency(format!("{name}: {m}")),
        Error::Precondition(m) => Error::precondition(format!("{name}: {m}")),
        other => other,
    }
}

pub fn assemble_hulls(d: &SemilatticeDiagram) -> Result<HullAssembly> {
    require_ample_diagram(d)?;
    if let Some(v) = d.components.iter().position(|c| !has_lc(c)) {
        return Err(Error::precondition(format!("component {v} lacks (LC)")));
    }
    let s = build_strong_semilattice(d)?;
    if !has_lc(&s.semigroup) {
        return Err(Error::precondition("the assembled S lacks (LC)"));
    }

    let hulls: Vec<InverseHull> = d
        .components
        .iter()
        .map(inverse_hull)
        .collect::<Result<_>>()
        .map_err(|e| stage("component hulls", e))?;
    let mut connectors = BTreeMap::new();
    for (&(a, b), phi) in &d.connectors {
        let (ha, hb) = (&hulls[a], &hulls[b]);
        let out = lift_morphism(
            &hull_embedding(ha)?,
            &hull_embedding(hb)?,
            &transport_to_hulls(ha, hb, phi),
        )
        .map_err(|e| stage("connector lifting", e))?;
        match out {
            LiftOutcome::Lifted(l) => {
                connectors.insert((a, b), l.map);
            }
            LiftOutcome::Refused(r) => {
                return Err(Error::consistency(format!(
                    "connector lifting: φ_({a},{b}) refused by {} at {:?}",
                    r.condition, r.witness
                )))
            }
        }
    }
    let q_diagram = SemilatticeDiagram {
        y: d.y.clone(),
        components: hulls
            .iter()
            .map(|h| h.inverse.semigroup().clone())
            .collect(),
        connectors,
    };
    let q = build_strong_semilattice(&q_diagram).map_err(|e| match e {
        Error::Input(m) => Error::consistency(format!("hull diagram: {m}")),
        other => other,
    })?;
    let q_inv = recognize_inverse(&q.semigroup)
        .map_err(|f| Error::consistency(format!("hull diagram is not inverse: {f}")))?;

    let s_in_q: Vec<Elem> = s
        .semigroup
        .elements()
        .map(|x| {
            let v = s.vertex_of[x];
            q.global(v, hulls[v].embedding[s.local_of[x]])
        })
        .collect();
    let e_q = SubsetEmbedding::new(q_inv, s_in_q.clone())?;
    let straight = e_q.is_straight().map_err(|e| stage("S in Q", e))?;
    if !straight {
        return Err(Error::consistency("S in Q: not straight"));
    }

    let sigma = inverse_hull(&s.semigroup).map_err(|e| stage("hull of S", e))?;
    let e_sigma = hull_embedding(&sigma)?;
    let phi: Vec<Elem> = e_q
        .members()
        .iter()
        .map(|&m| sigma.embedding[s_in_q.iter().position(|&x| x == m).expect("member")])
        .collect();
    let iso = match iso_over_s(&e_q, &e_sigma, &phi).map_err(|e| stage("isomorphism", e))? {
        IsoOutcome::Isomorphism(map) => map,
        IsoOutcome::Refused { direction, refusal } => {
            return Err(Error::consistency(format!(
                "isomorphism: {direction:?} lift refused by {} at {:?}",
                refusal.condition, refusal.witness
            )))
        }
    };
    Ok(HullAssembly {
        s,
        hulls,
        q_diagram,
        q,
        s_in_q,
        sigma,
        iso,
    })
}

/// For a diagram of groups: `Q = S(Y; Q_α)` (here `Q_α = S_α`) is a
/// semigroup of left I-quotients of `S` and `{e_α}` is a subsemigroup.
pub fn group_tower_check(d: &SemilatticeDiagram) -> Result<bool> {
    if let Some(v) = d.components.iter().position(|c| !c.is_group()) {
        return Err(Error::precondition(format!("component {v} is not a group")));
    }
    let a = assemble_hulls(d)?;
    let q: FiniteInverse = recognize_inverse(&a.q.semigroup)
        .map_err(|f| Error::consistency(format!("tower is not inverse: {f}")))?;
    let identities: Vec<Elem> = a
        .q_diagram
        .components
        .iter()
        .enumerate()
        .map(|(v, c)| a.q.global(v, c.identity().expect("group")))
        .collect();
    let e = SubsetEmbedding::new(q, a.s_in_q.clone())?;
    Ok(e.is_left_i_order() && a.q.semigroup.is_closed(&identities))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::table::samples::*;

    fn two_vertex(
        top: FiniteSemigroup,
        bottom: FiniteSemigroup,
        phi: Vec<Elem>,
    ) -> SemilatticeDiagram {
        // Y = {0 > 1}: chain(2) has 0 as the identity and 1 as the zero
        let mut connectors = BTreeMap::new();
        connectors.insert((0, 1), phi);
        SemilatticeDiagram {
            y: two_chain(),
            components: vec![top, bottom],
            connectors,
        }
    }

    fn clifford4() -> SemilatticeDiagram {
        two_vertex(cyclic_group(2), cyclic_group(2), vec![0, 1])
    }

    #[test]
    fn single_vertex_is_the_component() {
        let d = SemilatticeDiagram {
            y: trivial(),
            components: vec![cyclic_group(3)],
            connectors: BTreeMap::new(),
        };
        let s = build_strong_semilattice(&d).unwrap();
        assert_eq!(s.semigroup, cyclic_group(3));
    }

    #[test]
    fn two_trivial_components_give_two_chain() {
        let d = two_vertex(trivial(), trivial(), vec![0]);
        let s = build_strong_semilattice(&d).unwrap();
        assert_eq!(s.semigroup, two_chain());
    }

    #[test]
    fn clifford_semigroup_is_inverse() {
        let s = build_strong_semilattice(&clifford4()).unwrap();
        assert_eq!(s.semigroup.order(), 4);
        assert!(recognize_inverse(&s.semigroup).is_ok());
    }

    #[test]
    fn missing_and_bad_connectors_are_input_errors() {
        let mut d = clifford4();
        d.connectors.clear();
        assert!(matches!(d.validate(), Err(Error::Input(_))));
        let d = two_vertex(cyclic_group(2), cyclic_group(2), vec![1, 0]);
        assert!(matches!(d.validate(), Err(Error::Input(_))));
    }

    #[test]
    fn composite_axiom_is_checked() {
        // Y = 3-chain 0 > 1 > 2, components Z2, connectors chosen inconsistently
        let y = chain(3).relabel(&[2, 1, 0]);
        let mut connectors = BTreeMap::new();
        connectors.insert((0, 1), vec![0, 1]);
        connectors.insert((1, 2), vec![0, 1]);
        connectors.insert((0, 2), vec![0, 0]);
        let d = SemilatticeDiagram {
            y,
            components: vec![cyclic_group(2), cyclic_group(2), cyclic_group(2)],
            connectors,
        };
        let err = d.validate().unwrap_err();
        assert!(err.to_string().contains("φ_(0,1)φ_(1,2)"), "{err}");
    }

    #[test]
    fn extraction_recovers_clifford_connector() {
        let d = clifford4();
        let s = build_strong_semilattice(&d).unwrap();
        let ex = extract_strong_structure(&s.semigroup, &[s.block(0), s.block(1)]).unwrap();
        assert_eq!(ex.diagram, d);
    }

    #[test]
    fn extraction_of_semilattice_has_trivial_components() {
        let p = chain(3);
        let blocks: Vec<Vec<Elem>> = p.elements().map(|x| vec![x]).collect();
        let ex = extract_strong_structure(&p, &blocks).unwrap();
        assert!(ex.diagram.components.iter().all(|c| c.order() == 1));
        assert!(ex.diagram.connectors.values().all(|phi| phi == &vec![0]));
    }

    #[test]
    fn extraction_rejects_non_monoid_blocks() {
        let p = null(2);
        assert!(matches!(
            extract_strong_structure(&p, &[vec![0, 1]]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn clifford_ample_report() {
        let r = strong_semilattice_ample_check(&clifford4()).unwrap();
        assert_eq!(r.lc, Some((true, true)));
    }

    #[test]
    fn single_vertex_report_is_component_facts() {
        let d = SemilatticeDiagram {
            y: trivial(),
            components: vec![two_chain()],
            connectors: BTreeMap::new(),
        };
        let r = strong_semilattice_ample_check(&d).unwrap();
        assert_eq!(r.lc, Some((true, true)));
    }

    /// `{0, 1, 2, e}` where `e` is a left identity and every other product
    /// is `0`.
    fn left_unit_null() -> FiniteSemigroup {
        FiniteSemigroup::new(vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 3],
        ])
        .unwrap()
    }

    #[test]
    fn collapsing_connector_breaks_lc() {
        let m = left_unit_null();
        let d = two_vertex(m.clone(), m, vec![0, 1, 1, 3]);
        let r = strong_semilattice_ample_check(&d).unwrap();
        assert_eq!(r.lc, Some((false, false)));
        assert!(matches!(assemble_hulls(&d), Err(Error::Precondition(_))));
    }

    #[test]
    fn assembling_a_single_chain() {
        let d = SemilatticeDiagram {
            y: trivial(),
            components: vec![two_chain()],
            connectors: BTreeMap::new(),
        };
        let a = assemble_hulls(&d).unwrap();
        assert!(are_isomorphic(&a.q.semigroup, &two_chain()));
    }

    #[test]
    fn assembling_clifford_gives_itself() {
        let a = assemble_hulls(&clifford4()).unwrap();
        assert!(are_isomorphic(&a.q.semigroup, &a.s.semigroup));
        assert!(are_isomorphic(a.sigma.inverse.semigroup(), &a.s.semigroup));
    }

    #[test]
    fn assembling_non_inverse_components() {
        let m = left_unit_null();
        let d = two_vertex(m.clone(), m, vec![0, 1, 2, 3]);
        let a = assemble_hulls(&d).unwrap();
        assert_eq!(a.q.semigroup.order(), a.sigma.order());
        assert!(a.q.semigroup.order() > a.s.semigroup.order());
    }

    #[test]
    fn group_tower() {
        let z4 = cyclic_group(4);
        let d = two_vertex(z4, cyclic_group(2), vec![0, 1, 0, 1]);
        assert!(group_tower_check(&d).unwrap());
    }
}
