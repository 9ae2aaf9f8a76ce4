//! Brute-force reference semantics and model corpora shared by the
//! integration tests.
//!
//! The reference operators work on raw `u64` masks and never call into the
//! crate's operator code. Unawareness is computed naively as the
//! intersection of the first `2 * 2^n` iterates, with no cycle detection.

#![allow(dead_code)]

use unaware::io::{generate_model, Family, GeneratorParams};
use unaware::{Event, Model, StateSpace};

pub struct Reference {
    pub n: usize,
    pub images: Vec<u64>,
    pub revised: bool,
}

impl Reference {
    pub fn new(model: &Model, revised: bool) -> Self {
        Reference {
            n: model.size(),
            images: model.images().iter().map(|e| e.bits()).collect(),
            revised,
        }
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    pub fn k(&self, e: u64) -> u64 {
        let mut out = 0;
        for (i, &p) in self.images.iter().enumerate() {
            let nonempty_ok = !self.revised || p != 0;
            if nonempty_ok && p & !e == 0 {
                out |= 1 << i;
            }
        }
        out
    }

    pub fn nk(&self, e: u64) -> u64 {
        self.full() & !self.k(e)
    }

    pub fn u(&self, e: u64) -> u64 {
        let mut acc = self.full();
        let mut t = e;
        for _ in 0..2 * (1u64 << self.n) {
            t = self.nk(t);
            acc &= t;
        }
        acc
    }

    pub fn core(&self) -> u64 {
        if !self.revised {
            return 0;
        }
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn events(&self) -> std::ops::RangeInclusive<u64> {
        0..=self.full()
    }

    pub fn partitional(&self) -> bool {
        let refl = self.images.iter().enumerate().all(|(i, p)| p >> i & 1 == 1);
        refl && self.images.iter().all(|&p| {
            (0..self.n)
                .filter(|j| p >> j & 1 == 1)
                .all(|j| self.images[j] == p)
        })
    }

    /// Reference verdict for a catalog property, by exhaustive enumeration.
    pub fn holds(&self, id: &str) -> bool {
        let sub = |a: u64, b: u64| a & !b == 0;
        let core = self.core();
        let full = self.full();
        let all = |f: &dyn Fn(u64) -> bool| self.events().all(f);
        match id {
            "necessitation" => self.k(full) == full,
            "r_necessitation" => self.k(full) == full & !core,
            "monotonicity" => self.events().all(|e| {
                self.events()
                    .filter(|f| sub(e, *f))
                    .all(|f| sub(self.k(e), self.k(f)))
            }),
            "truth" => all(&|e| sub(self.k(e), e)),
            "positive_introspection" => all(&|e| sub(self.k(e), self.k(self.k(e)))),
            "negative_introspection" => all(&|e| sub(self.nk(e), self.k(self.nk(e)))),
            "ku_introspection" => all(&|e| self.k(self.u(e)) == 0),
            "au_introspection_core" => sub(core, self.u(core)),
            "au_introspection_all" => all(&|e| sub(self.u(e), self.u(self.u(e)))),
            "reverse_au_introspection" => all(&|e| sub(self.u(self.u(e)), self.u(e))),
            "plausibility" => all(&|e| {
                let ue = self.u(e);
                sub(core, ue) && sub(ue, self.nk(e) & self.nk(self.nk(e)))
            }),
            "symmetry" => core == self.u(0),
            "absorption" => all(&|e| self.k(e | core) == self.k(e)),
            "partition_no_unawareness" => !self.partitional() || all(&|e| self.u(e) == 0),
            other => panic!("no reference for {other}"),
        }
    }
}

pub fn event(model: &Model, bits: u64) -> Event {
    Event::from_bits(model.size(), bits).unwrap()
}

/// Every correspondence over `n` states, in lexicographic image order.
pub fn all_correspondences(n: usize) -> impl Iterator<Item = Model> {
    let per = 1u64 << n;
    let total = per.pow(n as u32);
    let space = StateSpace::numbered(n).unwrap();
    (0..total).map(move |mut code| {
        let images = (0..n)
            .map(|_| {
                let e = Event::from_bits(n, code % per).unwrap();
                code /= per;
                e
            })
            .collect();
        Model::new(space.clone(), images).unwrap()
    })
}

/// `count` general-family models with sizes cycling through `1..=max_n`
/// and densities / empty-image rates spread over their ranges.
pub fn random_models(count: usize, max_n: usize, seed: u64) -> Vec<Model> {
    (0..count)
        .map(|i| {
            let params = GeneratorParams {
                n_states: 1 + i % max_n,
                density: [0.2, 0.4, 0.6, 0.8][i % 4],
                p_empty: [0.0, 0.15, 0.3, 0.5, 1.0][(i / 4) % 5],
                family: Family::General,
                seed: seed.wrapping_add(i as u64),
            };
            generate_model(&params).unwrap()
        })
        .collect()
}

pub fn random_family(count: usize, max_n: usize, family: Family, seed: u64) -> Vec<Model> {
    (0..count)
        .map(|i| {
            let mut params =
                GeneratorParams::new(1 + i % max_n, family, seed.wrapping_add(i as u64));
            params.density = [0.3, 0.5, 0.7][i % 3];
            generate_model(&params).unwrap()
        })
        .collect()
}

/// Models whose aware states form a partition and never consider an
/// unaware state possible; unaware states have empty images.
pub fn partitioned_awareness(count: usize, max_n: usize, seed: u64) -> Vec<Model> {
    random_family(count, max_n, Family::Partitional, seed)
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            let n = m.size();
            // Blank out whole blocks so no aware state points at them.
            let pick = (seed as usize).wrapping_add(i);
            let images = m
                .images()
                .iter()
                .map(|&block| {
                    let leader = block.iter().next().unwrap();
                    if (leader + pick) % 3 == 0 {
                        Event::empty(n)
                    } else {
                        block
                    }
                })
                .collect();
            Model::new(m.space().clone(), images).unwrap()
        })
        .collect()
}
