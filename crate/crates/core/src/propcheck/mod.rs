//! Seeded property suites for the separation procedures and transforms.
//!
//! Every suite draws its instances from a ChaCha stream keyed by the suite
//! seed and the instance index, so a report depends only on
//! `(property, seed, count)` and instances can run in parallel.

mod checks;
mod demo;
mod generate;
mod report;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use checks::{Instance, Verdict};
pub use demo::{all_mixed_graphs, cg_unrepresentability_demo, find_cg_with_model, DEMO_ID};
pub use generate::{labels, random_graph, GeneratorConfig, GraphFamily};
pub use report::{Counterexample, PropertyReport};

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::separation::ENUMERATION_CAP;
use crate::transform::TransformSpec;

/// The checkable properties, one suite each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    SeparationOracle,
    SeparationMoral,
    WitnessAudit,
    Marginalization,
    Conditioning,
    Combined,
    AnterialPipeline,
    CompositionMarginal,
    CompositionConditional,
    CompositionCombined,
    CommutativityGraph,
    CommutativityModel,
    ClosureMarginalize,
    ClosureCondition,
    ClosureConditionCg,
    ClosureAnterialize,
    AnterializeModel,
    ClassH,
    ClassHCombined,
    ClassK,
    OracleMarginal,
    OracleConditional,
    OracleSubprimitive,
    MaximalityWitness,
}

#[derive(Clone, Copy)]
struct Shape {
    family: GraphFamily,
    nodes: (usize, usize),
    /// Which of m, c, m1, c1 are sampled.
    masks: [bool; 4],
}

impl Property {
    pub const ALL: [Property; 24] = [
        Property::SeparationOracle,
        Property::SeparationMoral,
        Property::WitnessAudit,
        Property::Marginalization,
        Property::Conditioning,
        Property::Combined,
        Property::AnterialPipeline,
        Property::CompositionMarginal,
        Property::CompositionConditional,
        Property::CompositionCombined,
        Property::CommutativityGraph,
        Property::CommutativityModel,
        Property::ClosureMarginalize,
        Property::ClosureCondition,
        Property::ClosureConditionCg,
        Property::ClosureAnterialize,
        Property::AnterializeModel,
        Property::ClassH,
        Property::ClassHCombined,
        Property::ClassK,
        Property::OracleMarginal,
        Property::OracleConditional,
        Property::OracleSubprimitive,
        Property::MaximalityWitness,
    ];

    pub fn id(self) -> &'static str {
        use Property::*;
        match self {
            SeparationOracle => "separation-oracle",
            SeparationMoral => "separation-moral",
            WitnessAudit => "witness-audit",
            Marginalization => "marginalization",
            Conditioning => "conditioning",
            Combined => "combined",
            AnterialPipeline => "anterial-pipeline",
            CompositionMarginal => "composition-marginal",
            CompositionConditional => "composition-conditional",
            CompositionCombined => "composition-combined",
            CommutativityGraph => "commutativity-graph",
            CommutativityModel => "commutativity-model",
            ClosureMarginalize => "closure-marginalize",
            ClosureCondition => "closure-condition",
            ClosureConditionCg => "closure-condition-cg",
            ClosureAnterialize => "closure-anterialize",
            AnterializeModel => "anterialize-model",
            ClassH => "class-h",
            ClassHCombined => "class-h-combined",
            ClassK => "class-k",
            OracleMarginal => "oracle-marginal",
            OracleConditional => "oracle-conditional",
            OracleSubprimitive => "oracle-subprimitive",
            MaximalityWitness => "maximality-witness",
        }
    }

    pub fn from_id(id: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.id() == id)
    }

    fn shape(self) -> Shape {
        use GraphFamily::*;
        use Property::*;
        let (family, nodes, masks) = match self {
            SeparationOracle => (Cmg, (4, 5), [false; 4]),
            SeparationMoral => (Cg, (2, 6), [false; 4]),
            WitnessAudit => (Cmg, (2, 5), [false; 4]),
            Marginalization | ClosureMarginalize | OracleMarginal => (Cmg, (2, 7), [true, false, false, false]),
            Conditioning | ClosureCondition | OracleConditional => (Cmg, (2, 7), [false, true, false, false]),
            Combined | CommutativityGraph | CommutativityModel => (Cmg, (2, 7), [true, true, false, false]),
            AnterialPipeline => (Ang, (2, 7), [true, true, false, false]),
            CompositionMarginal => (Cmg, (2, 7), [true, false, true, false]),
            CompositionConditional => (Cmg, (2, 7), [false, true, false, true]),
            CompositionCombined => (Cmg, (2, 7), [true; 4]),
            ClosureConditionCg => (Cg, (2, 7), [false, true, false, false]),
            ClosureAnterialize | AnterializeModel | OracleSubprimitive => (Cmg, (2, 7), [false; 4]),
            ClassH => (Cg, (2, 7), [true, false, false, false]),
            ClassHCombined | ClassK => (Cg, (2, 7), [true, true, false, false]),
            MaximalityWitness => (Cmg, (3, 7), [false; 4]),
        };
        Shape { family, nodes, masks }
    }

    fn check(self, x: &Instance) -> Verdict {
        use Property::*;
        let f = match self {
            SeparationOracle => checks::separation_oracle,
            SeparationMoral => checks::separation_moral,
            WitnessAudit => checks::witness_audit,
            Marginalization => checks::marginalization,
            Conditioning => checks::conditioning,
            Combined => checks::combined,
            AnterialPipeline => checks::ang,
            CompositionMarginal => checks::composition_marginal,
            CompositionConditional => checks::composition_conditional,
            CompositionCombined => checks::composition_combined,
            CommutativityGraph => checks::commutativity_graph,
            CommutativityModel => checks::commutativity_model,
            ClosureMarginalize => checks::closure_marginalize,
            ClosureCondition => checks::closure_condition,
            ClosureConditionCg => checks::closure_condition_cg,
            ClosureAnterialize => checks::closure_anterialize,
            AnterializeModel => checks::anterialize_model,
            ClassH | ClassHCombined => checks::class_h,
            ClassK => checks::class_k,
            OracleMarginal => checks::oracle_marginal,
            OracleConditional => checks::oracle_conditional,
            OracleSubprimitive => checks::oracle_subprimitive,
            MaximalityWitness => checks::maximality_witness,
        };
        f(x)
    }

    /// Draws instance number `index` of the suite seeded with `seed`.
    pub fn instance(self, seed: u64, index: u64) -> Instance {
        self.instance_in(self.shape().family, seed, index)
    }

    fn instance_in(self, family: GraphFamily, seed: u64, index: u64) -> Instance {
        let shape = self.shape();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let n = rng.gen_range(shape.nodes.0..=shape.nodes.1);
        let density = rng.gen_range(0.15..0.75);
        let graph = generate::sample(&mut rng, n, density, family);
        let used: Vec<usize> = (0..4).filter(|&k| shape.masks[k]).collect();
        let mut x = Instance::new(graph);
        if used.is_empty() {
            return x;
        }
        loop {
            let mut masks = [vec![false; n], vec![false; n], vec![false; n], vec![false; n]];
            let mut survivors = 0;
            for v in 0..n {
                if rng.gen_bool(0.45) {
                    survivors += 1;
                } else {
                    masks[used[rng.gen_range(0..used.len())]][v] = true;
                }
            }
            if survivors >= 2.min(n) {
                let [m, c, m1, c1] = masks;
                x.m = m;
                x.c = c;
                x.m1 = m1;
                x.c1 = c1;
                return x;
            }
        }
    }

    /// Checks a single instance and reports it, shrinking on failure.
    pub fn check_instance(self, x: &Instance) -> PropertyReport {
        let verdict = self.check(x);
        self.report(1, vec![(x, verdict)])
    }

    fn report(self, instances: usize, outcomes: Vec<(&Instance, Verdict)>) -> PropertyReport {
        let mut failures = 0;
        let mut skipped = 0;
        let mut first = None;
        for (x, verdict) in outcomes {
            match verdict {
                Verdict::Pass => {}
                Verdict::Skip => skipped += 1,
                Verdict::Fail(_) => {
                    failures += 1;
                    if first.is_none() {
                        first = Some(self.shrink(x.clone()));
                    }
                }
            }
        }
        PropertyReport {
            property_id: self.id().to_string(),
            instances,
            failures,
            skipped,
            first_counterexample: first,
        }
    }

    /// Deletes nodes while the failure persists.
    fn shrink(self, mut x: Instance) -> Counterexample {
        'outer: loop {
            for v in 0..x.graph.node_count() {
                let smaller = x.without(v);
                if let Verdict::Fail(_) = self.check(&smaller) {
                    x = smaller;
                    continue 'outer;
                }
            }
            break;
        }
        let detail = match self.check(&x) {
            Verdict::Fail(msg) => msg,
            _ => unreachable!("shrinking keeps the instance failing"),
        };
        let g = &x.graph;
        Counterexample {
            graph: g.clone(),
            m: g.set_of(&x.m),
            c: g.set_of(&x.c),
            m1: g.set_of(&x.m1),
            c1: g.set_of(&x.c1),
            detail,
        }
    }

    /// The family instances are drawn from.
    pub fn family(self) -> GraphFamily {
        self.shape().family
    }

    /// Runs `count` seeded instances.
    pub fn run(self, seed: u64, count: usize) -> PropertyReport {
        self.run_in(self.family(), seed, count)
    }

    /// Like [`Property::run`] but draws graphs from `family`. The family
    /// must satisfy the property's preconditions.
    pub fn run_in(self, family: GraphFamily, seed: u64, count: usize) -> PropertyReport {
        let instances: Vec<Instance> = (0..count as u64)
            .into_par_iter()
            .map(|k| self.instance_in(family, seed, k))
            .collect();
        let verdicts: Vec<Verdict> = instances.par_iter().map(|x| self.check(x)).collect();
        self.report(count, instances.iter().zip(verdicts).collect())
    }
}

/// Runs every property suite followed by the unrepresentability demo.
pub fn run_all(seed: u64, count: usize) -> Vec<PropertyReport> {
    let mut reports: Vec<PropertyReport> = Property::ALL.iter().map(|p| p.run(seed, count)).collect();
    reports.push(cg_unrepresentability_demo());
    reports
}

fn instance_for(g: &MixedGraph, first: &TransformSpec, second: &TransformSpec) -> Result<Instance> {
    g.require_cmg()?;
    if g.node_count() > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            nodes: g.node_count(),
            cap: ENUMERATION_CAP,
        });
    }
    let masks = [&first.m, &first.c, &second.m, &second.c].map(|s| g.mask(s));
    let [m, c, m1, c1] = masks;
    let x = Instance {
        graph: g.clone(),
        m: m?,
        c: c?,
        m1: m1?,
        c1: c1?,
    };
    let overlap = (0..g.node_count()).any(|v| (x.m[v] as u8 + x.c[v] as u8 + x.m1[v] as u8 + x.c1[v] as u8) > 1);
    if overlap {
        return Err(Error::MalformedQuery("transform sets must be disjoint".into()));
    }
    Ok(x)
}

/// Checks `property` on one graph. `first` supplies `M` and `C`, `second`
/// the further sets `M1` and `C1` used by the composition properties.
pub fn check_property(
    property: Property,
    g: &MixedGraph,
    first: &TransformSpec,
    second: &TransformSpec,
) -> Result<PropertyReport> {
    Ok(property.check_instance(&instance_for(g, first, second)?))
}

pub fn check_marginalization(g: &MixedGraph, m: &crate::NodeSet) -> Result<PropertyReport> {
    let spec = TransformSpec::new(m.clone(), Default::default());
    check_property(Property::Marginalization, g, &spec, &TransformSpec::default())
}

pub fn check_conditioning(g: &MixedGraph, c: &crate::NodeSet) -> Result<PropertyReport> {
    let spec = TransformSpec::new(Default::default(), c.clone());
    check_property(Property::Conditioning, g, &spec, &TransformSpec::default())
}

pub fn check_combined(g: &MixedGraph, spec: &TransformSpec) -> Result<PropertyReport> {
    check_property(Property::Combined, g, spec, &TransformSpec::default())
}

pub fn check_ang(g: &MixedGraph, spec: &TransformSpec) -> Result<PropertyReport> {
    check_property(Property::AnterialPipeline, g, spec, &TransformSpec::default())
}

/// Runs the three composition properties on `(first, second)`.
pub fn check_composition(g: &MixedGraph, first: &TransformSpec, second: &TransformSpec) -> Result<Vec<PropertyReport>> {
    [
        Property::CompositionMarginal,
        Property::CompositionConditional,
        Property::CompositionCombined,
    ]
    .into_iter()
    .map(|p| check_property(p, g, first, second))
    .collect()
}

pub fn check_commutativity(g: &MixedGraph, spec: &TransformSpec) -> Result<Vec<PropertyReport>> {
    [Property::CommutativityGraph, Property::CommutativityModel]
        .into_iter()
        .map(|p| check_property(p, g, spec, &TransformSpec::default()))
        .collect()
}

pub fn check_closure(g: &MixedGraph, spec: &TransformSpec) -> Result<Vec<PropertyReport>> {
    let mut props = vec![
        Property::ClosureMarginalize,
        Property::ClosureCondition,
        Property::ClosureAnterialize,
    ];
    if g.is_cg() {
        props.push(Property::ClosureConditionCg);
    }
    props
        .into_iter()
        .map(|p| check_property(p, g, spec, &TransformSpec::default()))
        .collect()
}

/// Class membership of transformed chain graphs.
pub fn check_class_membership(g: &MixedGraph, spec: &TransformSpec) -> Result<Vec<PropertyReport>> {
    g.require_cg()?;
    [Property::ClassHCombined, Property::ClassK]
        .into_iter()
        .map(|p| check_property(p, g, spec, &TransformSpec::default()))
        .collect()
}
