//! Conjugacy classes and power maps, computed from the explicit closure.

use crate::closure::FiniteGroupClosure;
use crate::error::GroupError;

/// Conjugacy class partition of a finite matrix group. Classes are sorted
/// by (element order, class size, smallest member id), which is
/// deterministic for a fixed generator list.
#[derive(Debug, Clone)]
pub struct ConjugacyClassData {
    class_of: Vec<u32>,
    representatives: Vec<u32>,
    sizes: Vec<usize>,
    orders: Vec<u32>,
    power2: Vec<u32>,
    power3: Vec<u32>,
    inverse_class: Vec<u32>,
}

impl ConjugacyClassData {
    pub fn compute(group: &FiniteGroupClosure) -> Result<Self, GroupError> {
        let n = group.order();
        let mut class_of = vec![u32::MAX; n];
        let mut members: Vec<Vec<u32>> = Vec::new();

        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let cid = members.len() as u32;
            // conjugation orbit under the generators
            let mut orbit = vec![start];
            class_of[start as usize] = cid;
            let mut queue = vec![start];
            while let Some(x) = queue.pop() {
                for &g in group.generator_ids() {
                    let gx = group.multiply(group.inverse_id(g), x)?;
                    let y = group.multiply(gx, g)?;
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = cid;
                        orbit.push(y);
                        queue.push(y);
                    }
                }
            }
            members.push(orbit);
        }

        // deterministic class ordering
        let mut reps: Vec<u32> = members
            .iter()
            .map(|m| *m.iter().min().expect("nonempty class"))
            .collect();
        let orders_raw: Vec<u32> = reps
            .iter()
            .map(|&r| group.element_order(r))
            .collect::<Result<_, _>>()?;
        let mut perm: Vec<usize> = (0..members.len()).collect();
        perm.sort_by_key(|&k| (orders_raw[k], members[k].len(), reps[k]));

        let mut sizes = Vec::with_capacity(members.len());
        let mut orders = Vec::with_capacity(members.len());
        let mut new_reps = Vec::with_capacity(members.len());
        let mut relabel = vec![0u32; members.len()];
        for (new_id, &old_id) in perm.iter().enumerate() {
            relabel[old_id] = new_id as u32;
            sizes.push(members[old_id].len());
            orders.push(orders_raw[old_id]);
            new_reps.push(reps[old_id]);
        }
        for c in class_of.iter_mut() {
            *c = relabel[*c as usize];
        }
        reps = new_reps;

        let mut power2 = Vec::with_capacity(reps.len());
        let mut power3 = Vec::with_capacity(reps.len());
        let mut inverse_class = Vec::with_capacity(reps.len());
        for &r in &reps {
            let r2 = group.multiply(r, r)?;
            let r3 = group.multiply(r2, r)?;
            power2.push(class_of[r2 as usize]);
            power3.push(class_of[r3 as usize]);
            inverse_class.push(class_of[group.inverse_id(r) as usize]);
        }

        Ok(Self {
            class_of,
            representatives: reps,
            sizes,
            orders,
            power2,
            power3,
            inverse_class,
        })
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, element: u32) -> u32 {
        self.class_of[element as usize]
    }

    pub fn class_of_all(&self) -> &[u32] {
        &self.class_of
    }

    pub fn representative(&self, class: u32) -> u32 {
        self.representatives[class as usize]
    }

    pub fn size(&self, class: u32) -> usize {
        self.sizes[class as usize]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn element_order(&self, class: u32) -> u32 {
        self.orders[class as usize]
    }

    /// Class of the k-th power of a class representative, k in {1, 2, 3}.
    pub fn power_class(&self, class: u32, k: u32) -> Result<u32, GroupError> {
        match k {
            1 => Ok(class),
            2 => Ok(self.power2[class as usize]),
            3 => Ok(self.power3[class as usize]),
            other => Err(GroupError::MissingPowerMap(other)),
        }
    }

    pub fn inverse_class(&self, class: u32) -> u32 {
        self.inverse_class[class as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::MatrixRepresentation;
    use ballq_algebra::VariableFrame;

    #[test]
    fn trivial_group_has_one_class() {
        let frame = VariableFrame::numbered("x", 2);
        let rep =
            MatrixRepresentation::from_substitutions(frame, &[vec!["x1", "x2"]]).unwrap();
        let g = FiniteGroupClosure::compute(&rep, 10).unwrap();
        let classes = ConjugacyClassData::compute(&g).unwrap();
        assert_eq!(classes.count(), 1);
        assert_eq!(classes.sizes(), &[1]);
    }

    #[test]
    fn s3_classes() {
        // permutation action on 3 variables: transposition and 3-cycle
        let frame = VariableFrame::numbered("x", 3);
        let rep = MatrixRepresentation::from_substitutions(
            frame,
            &[vec!["x2", "x1", "x3"], vec!["x2", "x3", "x1"]],
        )
        .unwrap();
        let g = FiniteGroupClosure::compute(&rep, 100).unwrap();
        assert_eq!(g.order(), 6);
        let classes = ConjugacyClassData::compute(&g).unwrap();
        assert_eq!(classes.count(), 3);
        let mut sizes = classes.sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        // sum of class sizes is the group order
        assert_eq!(classes.sizes().iter().sum::<usize>(), 6);
        // squaring a transposition lands in the identity class
        let transposition_class = (0..3)
            .find(|&c| classes.element_order(c) == 2)
            .unwrap();
        assert_eq!(classes.power_class(transposition_class, 2).unwrap(), 0);
    }
}
