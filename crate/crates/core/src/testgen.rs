//! Seeded generators of valid documents and host contexts for property and
//! acceptance tests.
//!
//! Documents produced by [`Gen::document`] have no validator Errors. Contexts
//! from [`Gen::context_for`] reuse the document's quantity names and
//! protocols so that every compatibility check has something to compare.

use std::collections::BTreeSet;

use chrono::NaiveDate;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::findings::Code;
use crate::model::*;

const QUANTITIES: &[(&str, &str)] = &[
    ("temperature", "degC"),
    ("humidity", "%"),
    ("voltage", "V"),
    ("current", "A"),
    ("shock", "g"),
    ("vibration", "g"),
    ("pressure", "kPa"),
    ("dust", "mg/m3"),
    ("esd", "kV"),
    ("rate", "Hz"),
];

const PROTOCOLS: &[(&str, &str)] = &[
    ("can", "2.0"),
    ("can", "2.0B"),
    ("ethernet", "1000BASE-T"),
    ("spacewire", "1"),
];

const WORDS: &[&str] = &[
    "sensor", "fusion", "lane", "keeping", "torque", "map", "planner", "thermal", "camera", "lidar", "fault",
    "Kalman", "β", "über", "naïve", "日本",
];

/// How a context was made more demanding.
#[derive(Debug, Clone, PartialEq)]
pub enum Tightening {
    WidenOffered { signal: usize, characteristic: usize },
    WidenEnvironment { index: usize },
    AddChangeClass(UncertaintyClass),
    AddVerification(VerificationCategory),
    AddPeer,
}

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        *items.choose(&mut self.rng).expect("non-empty")
    }

    /// Free text: words, punctuation and escapes that stress the writer.
    pub fn text(&mut self) -> String {
        let n = self.rng.gen_range(1..=4);
        let mut out: Vec<String> = (0..n).map(|_| self.pick(WORDS).to_string()).collect();
        match self.rng.gen_range(0..8) {
            0 => out.push("\"quoted\"".into()),
            1 => out.push("tab\there".into()),
            2 => out.push("line\nbreak".into()),
            3 => out.push("back\\slash".into()),
            4 => out.push("\u{1}ctl".into()),
            _ => {}
        }
        out.join(" ")
    }

    fn texts(&mut self, max: usize) -> Vec<String> {
        let n = self.rng.gen_range(0..=max);
        (0..n).map(|_| self.text()).collect()
    }

    /// Any finite real, biased toward values with short decimal forms.
    pub fn real(&mut self) -> f64 {
        match self.rng.gen_range(0..4) {
            0 => loop {
                let v = f64::from_bits(self.rng.gen());
                if v.is_finite() {
                    break v;
                }
            },
            1 => self.rng.gen_range(-1e6..1e6),
            2 => f64::from(self.rng.gen_range(-200i32..200)) / 10.0,
            _ => f64::from(self.rng.gen_range(-100i32..100)),
        }
    }

    /// Ordered pair of finite reals.
    pub fn interval(&mut self) -> (f64, f64) {
        let a = self.real();
        let b = if self.chance(0.1) { a } else { self.real() };
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Interval with small integer-ish endpoints, for compatibility scenarios.
    pub fn small_interval(&mut self) -> (f64, f64) {
        let a = f64::from(self.rng.gen_range(-50i32..50));
        let width = if self.chance(0.1) {
            0.0
        } else {
            f64::from(self.rng.gen_range(1i32..100))
        };
        (a, a + width)
    }

    fn bounds(&mut self) -> Bounds {
        if self.chance(0.8) {
            let (min, max) = self.interval();
            Bounds::Interval { min, max }
        } else {
            let mut labels: Vec<String> = ["low", "mid", "high", "off", "idle"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            labels.shuffle(&mut self.rng);
            labels.truncate(self.rng.gen_range(1..=5));
            Bounds::Labels(labels)
        }
    }

    fn envelopes(&mut self, max: usize) -> Vec<QuantityEnvelope> {
        let mut names: Vec<(&str, &str)> = QUANTITIES.to_vec();
        names.shuffle(&mut self.rng);
        let n = self.rng.gen_range(0..=max.min(names.len()));
        names[..n]
            .iter()
            .map(|&(name, unit)| QuantityEnvelope {
                name: name.to_string(),
                unit: unit.to_string(),
                bounds: self.bounds(),
            })
            .collect()
    }

    fn signal_kind(&mut self) -> SignalKind {
        match self.rng.gen_range(0..3) {
            0 => SignalKind::Information,
            1 => SignalKind::Material,
            _ => SignalKind::Energy(self.pick(EnergyKind::ALL)),
        }
    }

    fn signals(&mut self, prefix: &str, min: usize) -> Vec<SignalSpec> {
        let n = self.rng.gen_range(min..=4);
        (0..n)
            .map(|i| SignalSpec {
                signal_id: format!("{prefix}{i}"),
                kind: self.signal_kind(),
                direction: self.pick(Direction::ALL),
                characteristics: self.envelopes(3),
            })
            .collect()
    }

    fn group(&mut self) -> PhysicalGroup {
        let mut group = PhysicalGroup::default();
        for &category in PhysicalCategory::ALL {
            *group.category_mut(category) = self.envelopes(2);
        }
        group
    }

    fn hardware(&mut self) -> HardwareInterfaceSpec {
        let (protocol_name, protocol_version) = self.pick(PROTOCOLS);
        HardwareInterfaceSpec {
            physical_layer: PhysicalLayer {
                inbound: self.group(),
                outbound: self.group(),
            },
            transport_layer: TransportLayer {
                encoding: self.text(),
                protocol_name: protocol_name.to_string(),
                protocol_version: protocol_version.to_string(),
                mapping_description: self.text(),
            },
        }
    }

    fn unique_names(&mut self, prefix: &str, max: usize) -> Vec<String> {
        let n = self.rng.gen_range(0..=max);
        (0..n).map(|i| format!("{prefix}_{i}")).collect()
    }

    fn software(&mut self) -> SoftwareInterfaceSpec {
        let properties = self
            .unique_names("prop", 3)
            .into_iter()
            .map(|name| Property {
                name,
                visibility: self.pick(Visibility::ALL),
                description: self.text(),
            })
            .collect();
        let operations = self
            .unique_names("op", 3)
            .into_iter()
            .map(|name| Operation {
                name,
                inputs: self.text(),
                outputs: self.text(),
                description: self.text(),
            })
            .collect();
        let events = self
            .unique_names("evt", 2)
            .into_iter()
            .map(|name| Event {
                name,
                payload: self.text(),
                trigger: self.text(),
            })
            .collect();
        let mut ility_names = vec![
            "reliability",
            "maintainability",
            "safety",
            "security",
            "availability",
        ];
        ility_names.shuffle(&mut self.rng);
        ility_names.truncate(self.rng.gen_range(0..=3));
        let ilities = ility_names
            .into_iter()
            .map(|name| Ility {
                name: name.to_string(),
                level: self.pick(Level::ALL),
                characterization: self.text(),
            })
            .collect();
        let packaging = self.chance(0.7).then(|| {
            let mut contexts = self.texts(2);
            contexts.push(self.text());
            Packaging {
                role: self.text(),
                supported_contexts: contexts,
            }
        });
        SoftwareInterfaceSpec {
            properties,
            operations,
            events,
            constraints: Constraints {
                element_constraints: self.texts(2),
                relationship_constraints: self.texts(2),
            },
            packaging,
            ilities,
        }
    }

    fn model_card(&mut self) -> ModelCardReport {
        let mut card = ModelCardReport {
            model_details: Some(ModelDetails {
                date: self.text(),
                version: self.text(),
                model_type: self.text(),
                training_info: self.text(),
            }),
            intended_use: Some(self.texts(2)),
            factors: Some(self.texts(2)),
            metrics: Some(
                (0..self.rng.gen_range(0..3))
                    .map(|i| Metric {
                        name: format!("metric_{i}"),
                        value: self.real(),
                        threshold_note: self.text(),
                    })
                    .collect(),
            ),
            evaluation_data: Some(EvaluationData {
                datasets: self.texts(2),
                motivation: self.text(),
                preprocessing: self.text(),
            }),
            training_data: Some(self.text()),
            quantitative_analyses: Some(QuantitativeAnalyses {
                unitary: self.texts(2),
                intersectional: self.texts(2),
            }),
            ethical_considerations: Some(self.text()),
            caveats: Some(self.text()),
        };
        for &section in ModelCardSection::ALL {
            if self.chance(0.15) {
                card.clear(section);
            }
        }
        card
    }

    fn classes(&mut self, min: usize) -> BTreeSet<UncertaintyClass> {
        let mut set = BTreeSet::new();
        let n = self.rng.gen_range(min..=3);
        while set.len() < n {
            set.insert(self.pick(&UncertaintyClass::ALL));
        }
        set
    }

    fn verification(&mut self) -> BTreeSet<VerificationCategory> {
        VerificationCategory::ALL
            .iter()
            .copied()
            .filter(|_| self.chance(0.5))
            .collect()
    }

    fn optional_text(&mut self) -> String {
        if self.chance(0.2) {
            String::new()
        } else {
            self.text()
        }
    }

    fn autonomy(&mut self) -> AutonomySpec {
        let exploration_exploitation = self.chance(0.8).then(|| ExplorationExploitation {
            mode: self.pick(ExplorationMode::ALL),
            mechanism: self.text(),
        });
        let feedback_cycles = (0..self.rng.gen_range(0..3))
            .map(|i| FeedbackCycle {
                source: format!("loop_{i}"),
                latency_bound: self.rng.gen_range(1..10_000) as f64 / 1000.0,
                purpose: self.text(),
            })
            .collect();
        let interactions = (0..self.rng.gen_range(0..4))
            .map(|i| Interaction {
                peer: format!("peer_{i}"),
                filter_transform: self.text(),
            })
            .collect();
        AutonomySpec {
            exploration_exploitation,
            flexibility_degree: self.chance(0.7).then(|| self.pick(Level::ALL)),
            sensitivity_level: self.chance(0.7).then(|| self.pick(Sensitivity::ALL)),
            adaptation_operations: self.optional_text(),
            behavior_events: self.optional_text(),
            spatial_connectivity: self.optional_text(),
            change_types_handled: self.classes(1),
            feedback_cycles,
            interactions,
            noise_handling: self.optional_text(),
            cooperation_trigger: self.optional_text(),
            local_interaction_rules: self.optional_text(),
            human_interaction_rules: self.optional_text(),
            verification_strategies: self.verification(),
        }
    }

    fn risk(&mut self) -> RiskEntry {
        if self.chance(0.3) {
            return RiskEntry::not_assessed();
        }
        let likelihood = self.pick(&Likelihood::ALL[..3]);
        RiskEntry {
            status: RiskStatus::Assessed,
            likelihood,
            mitigation: self.optional_text(),
        }
    }

    fn considerations(&mut self) -> ConsiderationsSpec {
        let mut spec = ConsiderationsSpec::unassessed();
        for &kind in ConsiderationKind::ALL {
            *spec.entry_mut(kind) = self.risk();
        }
        spec
    }

    fn date(&mut self) -> NaiveDate {
        let year = self.rng.gen_range(1000..=9999);
        let day = self.rng.gen_range(1..=365);
        NaiveDate::from_yo_opt(year, day).expect("day of year within 1..=365")
    }

    /// A document without validator Errors. Each optional section is present
    /// or absent independently, subject to the AI-enabled requirements.
    pub fn document(&mut self) -> InterfaceDescription {
        let ai_enabled = self.chance(0.5);
        let mut hardware = self.chance(0.6).then(|| self.hardware());
        let software = self.chance(0.6).then(|| self.software());
        if hardware.is_none() && software.is_none() {
            hardware = Some(self.hardware());
        }
        let section = |g: &mut Self| ai_enabled || g.chance(0.3);
        let model_card = section(self).then(|| self.model_card());
        let autonomy = section(self).then(|| self.autonomy());
        let considerations = section(self).then(|| self.considerations());
        InterfaceDescription {
            meta: DocumentMeta {
                component_id: format!("cmp-{}", self.rng.gen_range(0..100_000)),
                name: self.text(),
                version: Version::new(
                    self.rng.gen_range(0..20),
                    self.rng.gen_range(0..50),
                    self.rng.gen_range(0..1000),
                ),
                date: self.date(),
                authors: self.texts(3),
                schema_version: SCHEMA_VERSION,
                ai_enabled,
            },
            signals: self.signals("sig", 1),
            hardware,
            software,
            model_card,
            autonomy,
            considerations,
        }
    }

    /// A document tuned for compatibility scenarios: small integer ranges and
    /// interval bounds only, so that containment outcomes vary.
    pub fn scenario_document(&mut self) -> InterfaceDescription {
        let mut doc = self.document();
        let reshape = |g: &mut Self, env: &mut QuantityEnvelope| {
            let (min, max) = g.small_interval();
            env.bounds = Bounds::Interval { min, max };
        };
        for signal in &mut doc.signals {
            for env in &mut signal.characteristics {
                reshape(self, env);
            }
        }
        if let Some(hw) = &mut doc.hardware {
            for group in [&mut hw.physical_layer.inbound, &mut hw.physical_layer.outbound] {
                for &category in PhysicalCategory::ALL {
                    for env in group.category_mut(category) {
                        reshape(self, env);
                    }
                }
            }
        }
        doc
    }

    /// A host context that mirrors the document's signals, environment
    /// quantities and protocols, with randomized ranges and demands.
    /// A host for `doc`. Half the time it is built to fit the component, so
    /// compatible baselines are common; otherwise every part is jittered.
    pub fn context_for(&mut self, doc: &InterfaceDescription) -> SystemContext {
        let fitting = self.chance(0.5);
        let mut offered = Vec::new();
        let mut accepted = Vec::new();
        for signal in &doc.signals {
            if !fitting && !self.chance(0.85) {
                continue;
            }
            let kind = if fitting || self.chance(0.9) {
                signal.kind
            } else {
                self.signal_kind()
            };
            let characteristics = signal
                .characteristics
                .iter()
                .map(|c| if fitting { c.clone() } else { self.nearby(c) })
                .collect::<Vec<_>>();
            let host = SignalSpec {
                signal_id: format!("host-{}", signal.signal_id),
                kind,
                direction: Direction::Bidirectional,
                characteristics,
            };
            if signal.direction.accepts() {
                offered.push(SignalSpec {
                    direction: Direction::Out,
                    ..host.clone()
                });
            }
            if signal.direction.emits() {
                accepted.push(SignalSpec {
                    direction: Direction::In,
                    ..host
                });
            }
        }
        let mut environment = Vec::new();
        let mut transports = Vec::new();
        if let Some(hw) = &doc.hardware {
            let inbound: Vec<&QuantityEnvelope> =
                hw.physical_layer.inbound.iter().map(|(_, _, e)| e).collect();
            let outbound: Vec<&QuantityEnvelope> =
                hw.physical_layer.outbound.iter().map(|(_, _, e)| e).collect();
            for env in &inbound {
                if environment.iter().any(|e: &QuantityEnvelope| e.name == env.name) {
                    continue;
                }
                if fitting {
                    // The host guarantees what every tolerance of that name allows.
                    environment.extend(combine(&inbound, &env.name, Combine::Intersection));
                } else if self.chance(0.8) {
                    environment.push(self.nearby(env));
                }
            }
            let mut emitted: Vec<&str> = Vec::new();
            for env in &outbound {
                let characteristic = if fitting {
                    if emitted.contains(&env.name.as_str()) {
                        continue;
                    }
                    emitted.push(&env.name);
                    combine(&outbound, &env.name, Combine::Hull)
                } else if self.chance(0.5) {
                    Some(self.nearby(env))
                } else {
                    None
                };
                if let Some(c) = characteristic {
                    accepted.push(SignalSpec {
                        signal_id: format!("emission-{}", accepted.len()),
                        kind: SignalKind::Energy(EnergyKind::Electrical),
                        direction: Direction::In,
                        characteristics: vec![c],
                    });
                }
            }
            if fitting {
                // Emissions are checked against the first accepted quantity of
                // the same name, which may belong to a signal.
                for c in accepted.iter_mut().flat_map(|s| s.characteristics.iter_mut()) {
                    let mut pool = outbound.clone();
                    pool.push(c);
                    if let Some(wider) = combine(&pool, &c.name, Combine::Hull) {
                        *c = wider;
                    }
                }
            }
            let t = &hw.transport_layer;
            match if fitting { 2 } else { self.rng.gen_range(0..4) } {
                0 => {}
                1 => transports.push(TransportRef {
                    protocol_name: t.protocol_name.clone(),
                    protocol_version: format!("{}-rev", t.protocol_version),
                }),
                _ => transports.push(TransportRef {
                    protocol_name: t.protocol_name.clone(),
                    protocol_version: t.protocol_version.clone(),
                }),
            }
        }
        let mut required_ilities = Vec::new();
        if fitting {
            for ility in doc.software.iter().flat_map(|sw| &sw.ilities) {
                if self.chance(0.5) {
                    required_ilities.push(RequiredIlity {
                        name: ility.name.clone(),
                        minimum_level: ility.level,
                    });
                }
            }
        } else {
            for name in ["reliability", "safety", "security"] {
                if self.chance(0.3) {
                    required_ilities.push(RequiredIlity {
                        name: name.to_string(),
                        minimum_level: self.pick(Level::ALL),
                    });
                }
            }
        }
        let (change_profile, required_verification) = match (&doc.autonomy, fitting) {
            (Some(autonomy), true) => {
                let covered: Vec<UncertaintyClass> = UncertaintyClass::ALL
                    .into_iter()
                    .filter(|&c| covers_uncertainty(&autonomy.change_types_handled, c))
                    .collect();
                let mut profile = BTreeSet::from([self.pick(&covered)]);
                profile.insert(self.pick(&covered));
                let verification = autonomy
                    .verification_strategies
                    .iter()
                    .copied()
                    .filter(|_| self.chance(0.5))
                    .collect();
                (profile, verification)
            }
            _ => (self.classes(1), self.verification()),
        };
        SystemContext {
            context_id: format!("ctx-{}", self.rng.gen_range(0..100_000)),
            offered_signals: offered,
            accepted_signals: accepted,
            environment,
            available_transports: transports,
            change_profile,
            required_ilities,
            required_verification,
            requires_online_adaptation: !fitting && self.chance(0.5),
            peer_interface_count: if fitting { 0 } else { self.rng.gen_range(0..4) },
            human_interaction_expected: !fitting && self.chance(0.5),
        }
    }

    /// Same name and unit; interval bounds are jittered so the copy may or
    /// may not fit the original.
    fn nearby(&mut self, env: &QuantityEnvelope) -> QuantityEnvelope {
        let bounds = match &env.bounds {
            Bounds::Interval { min, max } => {
                let lo = min + f64::from(self.rng.gen_range(-10i32..=10));
                let hi = max + f64::from(self.rng.gen_range(-10i32..=10));
                Bounds::Interval {
                    min: lo.min(hi),
                    max: lo.max(hi),
                }
            }
            Bounds::Labels(labels) => {
                let mut labels = labels.clone();
                if self.chance(0.3) && !labels.iter().any(|l| l == "extra") {
                    labels.push("extra".into());
                }
                Bounds::Labels(labels)
            }
        };
        QuantityEnvelope {
            name: env.name.clone(),
            unit: env.unit.clone(),
            bounds,
        }
    }

    /// Makes the context strictly more demanding in one randomly chosen way.
    pub fn tighten(&mut self, ctx: &SystemContext) -> (SystemContext, Tightening) {
        let mut out = ctx.clone();
        let offered: Vec<(usize, usize)> = ctx
            .offered_signals
            .iter()
            .enumerate()
            .flat_map(|(i, s)| (0..s.characteristics.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                matches!(
                    ctx.offered_signals[i].characteristics[j].bounds,
                    Bounds::Interval { .. }
                )
            })
            .collect();
        let environment: Vec<usize> = (0..ctx.environment.len())
            .filter(|&i| matches!(ctx.environment[i].bounds, Bounds::Interval { .. }))
            .collect();
        loop {
            match self.rng.gen_range(0..5) {
                0 if !offered.is_empty() => {
                    let (i, j) = self.pick(&offered);
                    let widen = self.widening();
                    widen_bounds(&mut out.offered_signals[i].characteristics[j].bounds, widen);
                    return (
                        out,
                        Tightening::WidenOffered {
                            signal: i,
                            characteristic: j,
                        },
                    );
                }
                1 if !environment.is_empty() => {
                    let i = self.pick(&environment);
                    let widen = self.widening();
                    widen_bounds(&mut out.environment[i].bounds, widen);
                    return (out, Tightening::WidenEnvironment { index: i });
                }
                2 => {
                    let class = self.pick(&UncertaintyClass::ALL);
                    out.change_profile.insert(class);
                    return (out, Tightening::AddChangeClass(class));
                }
                3 => {
                    let category = self.pick(VerificationCategory::ALL);
                    out.required_verification.insert(category);
                    return (out, Tightening::AddVerification(category));
                }
                4 => {
                    out.peer_interface_count += 1;
                    return (out, Tightening::AddPeer);
                }
                _ => {}
            }
        }
    }

    fn widening(&mut self) -> (f64, f64) {
        (
            f64::from(self.rng.gen_range(0i32..=20)),
            f64::from(self.rng.gen_range(0i32..=20)),
        )
    }
}

fn widen_bounds(bounds: &mut Bounds, (down, up): (f64, f64)) {
    if let Bounds::Interval { min, max } = bounds {
        *min -= down;
        *max += up;
    }
}

/// Error rules of the document validator that [`Gen::mutate`] can seed.
pub const MUTABLE_ERROR_RULES: &[Code] = &[
    Code::EmptyComponentId,
    Code::NoSignals,
    Code::NoInterfaceSection,
    Code::DupSignalId,
    Code::DupCharacteristic,
    Code::BadRange,
    Code::BadLabelSet,
    Code::NonFiniteNumber,
    Code::DupSoftwareName,
    Code::EmptySupportedContexts,
    Code::MissingModelCard,
    Code::MissingAutonomy,
    Code::MissingConsiderations,
    Code::NoChangeTypes,
    Code::BadLatency,
    Code::InconsistentRisk,
];

impl Gen {
    /// A valid AI-enabled document with every optional section present.
    pub fn full_document(&mut self) -> InterfaceDescription {
        let mut doc = self.document();
        doc.meta.ai_enabled = true;
        if doc.hardware.is_none() {
            doc.hardware = Some(self.hardware());
        }
        if doc.software.is_none() {
            doc.software = Some(self.software());
        }
        if doc.model_card.is_none() {
            doc.model_card = Some(self.model_card());
        }
        if doc.autonomy.is_none() {
            doc.autonomy = Some(self.autonomy());
        }
        if doc.considerations.is_none() {
            doc.considerations = Some(self.considerations());
        }
        doc
    }

    /// Violates exactly one validator rule of `clean`, which must come from
    /// [`Gen::full_document`]. Where the rule needs an element the document
    /// lacks, a valid one is added first.
    pub fn mutate(&mut self, clean: &InterfaceDescription, rule: Code) -> InterfaceDescription {
        let mut doc = clean.clone();
        match rule {
            Code::EmptyComponentId => {
                doc.meta.component_id = self.pick(&["", " ", "\t"]).to_string();
            }
            Code::NoSignals => doc.signals.clear(),
            Code::NoInterfaceSection => {
                doc.hardware = None;
                doc.software = None;
            }
            Code::DupSignalId => {
                if doc.signals.len() < 2 {
                    let mut extra = doc.signals[0].clone();
                    extra.signal_id.push_str("-extra");
                    doc.signals.push(extra);
                }
                let n = doc.signals.len();
                let i = self.rng.gen_range(0..n);
                let j = (i + self.rng.gen_range(1..n)) % n;
                doc.signals[j].signal_id = doc.signals[i].signal_id.clone();
            }
            Code::DupCharacteristic => {
                let i = self.rng.gen_range(0..doc.signals.len());
                let signal = &mut doc.signals[i];
                if signal.characteristics.is_empty() {
                    signal
                        .characteristics
                        .push(QuantityEnvelope::interval("voltage", "V", 0.0, 5.0));
                }
                let copy = signal
                    .characteristics
                    .choose(&mut self.rng)
                    .cloned()
                    .expect("non-empty");
                let at = self.rng.gen_range(0..=signal.characteristics.len());
                signal.characteristics.insert(at, copy);
            }
            Code::BadRange => {
                let max = self.real();
                let gap = self.rng.gen_range(0.5..1e3) * max.abs().max(1.0);
                let min = max + gap;
                if min.is_finite() && min > max {
                    *self.some_bounds(&mut doc) = Bounds::Interval { min, max };
                } else {
                    *self.some_bounds(&mut doc) = Bounds::Interval { min: 1.0, max: -1.0 };
                }
            }
            Code::BadLabelSet => {
                let labels = if self.chance(0.5) {
                    Vec::new()
                } else {
                    vec!["on".to_string(), "off".to_string(), "on".to_string()]
                };
                *self.some_bounds(&mut doc) = Bounds::Labels(labels);
            }
            Code::NonFiniteNumber => {
                let bad = self.pick(&[f64::NAN, f64::INFINITY, f64::NEG_INFINITY]);
                match self.rng.gen_range(0..3) {
                    0 => {
                        let card = doc.model_card.as_mut().expect("full document");
                        let metrics = card.metrics.get_or_insert_with(Vec::new);
                        metrics.push(Metric {
                            name: "accuracy".into(),
                            value: bad,
                            threshold_note: String::new(),
                        });
                    }
                    1 => {
                        let autonomy = doc.autonomy.as_mut().expect("full document");
                        autonomy.feedback_cycles.push(FeedbackCycle {
                            source: "loop_bad".into(),
                            latency_bound: bad,
                            purpose: String::new(),
                        });
                    }
                    _ => {
                        *self.some_bounds(&mut doc) = Bounds::Interval { min: 0.0, max: bad };
                    }
                }
            }
            Code::DupSoftwareName => {
                let sw = doc.software.as_mut().expect("full document");
                match self.rng.gen_range(0..4) {
                    0 => {
                        let p = Property {
                            name: "dup".into(),
                            visibility: Visibility::Observable,
                            description: String::new(),
                        };
                        sw.properties.push(p.clone());
                        sw.properties.push(p);
                    }
                    1 => {
                        let o = Operation {
                            name: "dup".into(),
                            inputs: String::new(),
                            outputs: String::new(),
                            description: String::new(),
                        };
                        sw.operations.push(o.clone());
                        sw.operations.push(o);
                    }
                    2 => {
                        let e = Event {
                            name: "dup".into(),
                            payload: String::new(),
                            trigger: String::new(),
                        };
                        sw.events.push(e.clone());
                        sw.events.push(e);
                    }
                    _ => {
                        let i = Ility {
                            name: "dup".into(),
                            level: Level::Low,
                            characterization: String::new(),
                        };
                        sw.ilities.push(i.clone());
                        sw.ilities.push(i);
                    }
                }
            }
            Code::EmptySupportedContexts => {
                let sw = doc.software.as_mut().expect("full document");
                let role = self.text();
                sw.packaging = Some(Packaging {
                    role,
                    supported_contexts: Vec::new(),
                });
            }
            Code::MissingModelCard => doc.model_card = None,
            Code::MissingAutonomy => doc.autonomy = None,
            Code::MissingConsiderations => doc.considerations = None,
            Code::NoChangeTypes => {
                doc.autonomy
                    .as_mut()
                    .expect("full document")
                    .change_types_handled
                    .clear();
            }
            Code::BadLatency => {
                let latency = self.pick(&[0.0, -0.0, -1.0, -1e-9, -3600.0]);
                let autonomy = doc.autonomy.as_mut().expect("full document");
                if autonomy.feedback_cycles.is_empty() {
                    autonomy.feedback_cycles.push(FeedbackCycle {
                        source: "loop".into(),
                        latency_bound: 1.0,
                        purpose: String::new(),
                    });
                }
                let i = self.rng.gen_range(0..autonomy.feedback_cycles.len());
                autonomy.feedback_cycles[i].latency_bound = latency;
            }
            Code::InconsistentRisk => {
                let kind = self.pick(ConsiderationKind::ALL);
                let entry = doc
                    .considerations
                    .as_mut()
                    .expect("full document")
                    .entry_mut(kind);
                entry.status = RiskStatus::Assessed;
                entry.likelihood = Likelihood::Unknown;
            }
            other => panic!("{other:?} is not a mutable document rule"),
        }
        doc
    }

    /// Some envelope of the document, chosen at random among signal
    /// characteristics and physical-layer entries.
    fn some_bounds<'d>(&mut self, doc: &'d mut InterfaceDescription) -> &'d mut Bounds {
        let physical = doc.hardware.as_ref().map_or(0, |hw| {
            hw.physical_layer.inbound.iter().count() + hw.physical_layer.outbound.iter().count()
        });
        let characteristics: usize = doc.signals.iter().map(|s| s.characteristics.len()).sum();
        if physical + characteristics == 0 {
            doc.signals[0]
                .characteristics
                .push(QuantityEnvelope::interval("voltage", "V", 0.0, 5.0));
            return &mut doc.signals[0].characteristics[0].bounds;
        }
        let mut slots: Vec<&'d mut QuantityEnvelope> = Vec::new();
        let InterfaceDescription {
            signals, hardware, ..
        } = doc;
        for signal in signals.iter_mut() {
            slots.extend(signal.characteristics.iter_mut());
        }
        if let Some(hw) = hardware {
            let PhysicalLayer { inbound, outbound } = &mut hw.physical_layer;
            for group in [inbound, outbound] {
                let PhysicalGroup {
                    electrical_emc,
                    electrical_communication,
                    mechanical,
                    thermal,
                    particulate,
                } = group;
                for list in [
                    electrical_emc,
                    electrical_communication,
                    mechanical,
                    thermal,
                    particulate,
                ] {
                    slots.extend(list.iter_mut());
                }
            }
        }
        let i = self.rng.gen_range(0..slots.len());
        &mut slots.swap_remove(i).bounds
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Combine {
    Hull,
    Intersection,
}

/// Hull or intersection of every envelope called `name`, or `None` when
/// they mix units or bound forms or the intersection is empty.
fn combine(envelopes: &[&QuantityEnvelope], name: &str, how: Combine) -> Option<QuantityEnvelope> {
    let mut same = envelopes.iter().filter(|e| e.name == name);
    let first = (*same.next()?).clone();
    same.try_fold(first, |acc, e| {
        if e.unit != acc.unit {
            return None;
        }
        let bounds = match (&acc.bounds, &e.bounds) {
            (Bounds::Interval { min: a, max: b }, Bounds::Interval { min: c, max: d }) => match how {
                Combine::Hull => Bounds::Interval {
                    min: a.min(*c),
                    max: b.max(*d),
                },
                Combine::Intersection if a.max(*c) <= b.min(*d) => Bounds::Interval {
                    min: a.max(*c),
                    max: b.min(*d),
                },
                Combine::Intersection => return None,
            },
            (Bounds::Labels(x), Bounds::Labels(y)) => {
                let labels: Vec<String> = match how {
                    Combine::Hull => x
                        .iter()
                        .chain(y.iter().filter(|l| !x.contains(l)))
                        .cloned()
                        .collect(),
                    Combine::Intersection => x.iter().filter(|l| y.contains(l)).cloned().collect(),
                };
                if labels.is_empty() {
                    return None;
                }
                Bounds::Labels(labels)
            }
            _ => return None,
        };
        Some(QuantityEnvelope { bounds, ..acc })
    })
}
