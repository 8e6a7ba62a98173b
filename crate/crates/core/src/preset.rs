//! Named parameter sets. Both are desk-scale and offer no security.

use crate::braid::GroupParams;
use crate::conjugacy::ConjugacyCaps;
use crate::schemes::SchemeParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub l: usize,
    pub r: usize,
    pub key_length: usize,
    pub ephemeral_length: usize,
    pub h1_length: usize,
    pub caps: ConjugacyCaps,
}

pub const TOY_6: Preset = Preset {
    name: "toy-6",
    l: 3,
    r: 3,
    key_length: 16,
    ephemeral_length: 16,
    h1_length: 16,
    caps: ConjugacyCaps { sss_cap: 20_000, cycling_cap: 10_000 },
};

pub const TOY_8: Preset = Preset {
    name: "toy-8",
    l: 4,
    r: 4,
    key_length: 20,
    ephemeral_length: 20,
    h1_length: 20,
    caps: ConjugacyCaps { sss_cap: 20_000, cycling_cap: 10_000 },
};

pub const PRESETS: [Preset; 2] = [TOY_6, TOY_8];

impl Preset {
    pub fn by_name(name: &str) -> Option<Preset> {
        PRESETS.into_iter().find(|p| p.name == name)
    }

    pub fn group(&self) -> GroupParams {
        GroupParams::new(self.l, self.r).expect("preset parameters are valid")
    }

    pub fn scheme_params(&self) -> SchemeParams {
        let mut sp = SchemeParams::new(self.group(), self.key_length, self.ephemeral_length, self.h1_length);
        sp.caps = self.caps;
        sp
    }
}

#[test]
fn lookup() {
    assert_eq!(Preset::by_name("toy-6").unwrap().group().n(), 6);
    assert_eq!(Preset::by_name("toy-8").unwrap().scheme_params().key_length, 20);
    assert!(Preset::by_name("toy-7").is_none());
}
