//! The cloud operator `Cl_A(B)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::qset::Qset;

/// The cloud of a core relative to an ambient qset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cloud {
    ambient: Qset,
    core: Qset,
    extent: Qset,
}

impl Cloud {
    pub fn ambient(&self) -> &Qset {
        &self.ambient
    }

    pub fn core(&self) -> &Qset {
        &self.core
    }

    /// Every element of the ambient indistinguishable from some core element.
    pub fn extent(&self) -> &Qset {
        &self.extent
    }
}

/// Compute `Cl_ambient(core)`.
///
/// Each m-atom species present in the core contributes its whole ambient
/// class; classical members are indistinguishable only from themselves and
/// pass through unchanged.
pub fn cloud(ambient: &Qset, core: &Qset) -> Result<Cloud> {
    if !core.is_subqset_of(ambient) {
        return Err(Error::domain(format!("core {core} is not a subqset of {ambient}")));
    }
    let extent = cloud_extent(ambient, core);
    Ok(Cloud {
        ambient: ambient.clone(),
        core: core.clone(),
        extent,
    })
}

pub(crate) fn cloud_extent(ambient: &Qset, core: &Qset) -> Qset {
    let classes: BTreeMap<&str, usize> = core
        .composition()
        .keys()
        .map(|s| (s.as_str(), ambient.count(s)))
        .collect();
    let mut extent = Qset::empty(ambient.universe());
    for (s, n) in classes {
        extent = extent
            .with_count(s, n)
            .expect("ambient counts fit the universe");
    }
    for m in core.members() {
        extent = extent
            .with_member(&m.species, &m.label)
            .expect("core members belong to the universe");
    }
    extent
}

/// Whether two clouds over the same ambient share an element.
pub fn clouds_intersect(a: &Cloud, b: &Cloud) -> Result<bool> {
    if !a.ambient.indiscernible(&b.ambient) {
        return Err(Error::domain("clouds are relative to different ambients"));
    }
    Ok(!a.extent.intersection(&b.extent)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qset::Universe;

    #[test]
    fn all_indiscernible_cloud_is_whole_ambient() {
        let u = Universe::builder().quantum("s", 6).build().unwrap();
        let a = Qset::ambient(&u);
        let b = Qset::empty(&u).with_count("s", 2).unwrap();
        let c = cloud(&a, &b).unwrap();
        assert_eq!(c.extent(), &a);
        assert!(c.core().is_subqset_of(c.extent()));
    }

    #[test]
    fn empty_core_has_empty_cloud() {
        let u = Universe::builder().quantum("s", 6).build().unwrap();
        let a = Qset::ambient(&u);
        let c = cloud(&a, &Qset::empty(&u)).unwrap();
        assert!(c.extent().is_empty());
    }

    #[test]
    fn cloud_stays_in_species_class() {
        let u = Universe::builder().quantum("s", 2).quantum("t", 3).build().unwrap();
        let a = Qset::ambient(&u);
        let b = Qset::empty(&u).with_count("s", 1).unwrap();
        assert_eq!(cloud(&a, &b).unwrap().extent().to_string(), "{s:2}");
    }

    #[test]
    fn classical_members_pass_through() {
        let u = Universe::builder()
            .quantum("e", 2)
            .classical("person", ["Paul", "Peter"])
            .build()
            .unwrap();
        let a = Qset::ambient(&u);
        let b = Qset::empty(&u)
            .with_member("person", "Peter")
            .unwrap()
            .with_count("e", 1)
            .unwrap();
        assert_eq!(cloud(&a, &b).unwrap().extent().to_string(), "{e:2, person:Peter}");
    }

    #[test]
    fn core_outside_ambient_rejected() {
        let u = Universe::builder().quantum("s", 4).build().unwrap();
        let a = Qset::empty(&u).with_count("s", 2).unwrap();
        let b = Qset::empty(&u).with_count("s", 3).unwrap();
        assert!(matches!(cloud(&a, &b), Err(Error::Domain(_))));
    }

    #[test]
    fn disjoint_cores_overlapping_clouds() {
        let u = Universe::builder().quantum("s", 6).build().unwrap();
        let a = Qset::ambient(&u);
        let parts = a.disjoint_partition(&[2, 2]).unwrap();
        assert!(a.fits_disjointly(&parts).unwrap());
        let c1 = cloud(&a, &parts[0]).unwrap();
        let c2 = cloud(&a, &parts[1]).unwrap();
        assert!(clouds_intersect(&c1, &c2).unwrap());
        assert!(clouds_intersect(&c1, &c1).unwrap());
    }

    #[test]
    fn distinct_species_clouds_do_not_meet() {
        let u = Universe::builder().quantum("s", 2).quantum("t", 2).build().unwrap();
        let a = Qset::ambient(&u);
        let c1 = cloud(&a, &Qset::empty(&u).with_count("s", 1).unwrap()).unwrap();
        let c2 = cloud(&a, &Qset::empty(&u).with_count("t", 1).unwrap()).unwrap();
        assert!(!clouds_intersect(&c1, &c2).unwrap());
    }

    #[test]
    fn different_ambients_rejected() {
        let u = Universe::builder().quantum("s", 4).build().unwrap();
        let a1 = Qset::ambient(&u);
        let a2 = Qset::empty(&u).with_count("s", 3).unwrap();
        let core = Qset::empty(&u).with_count("s", 1).unwrap();
        let c1 = cloud(&a1, &core).unwrap();
        let c2 = cloud(&a2, &core).unwrap();
        assert!(clouds_intersect(&c1, &c2).is_err());
    }
}
