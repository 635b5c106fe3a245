//! Prefix trees whose pre-order traversal lists each family in canonical
//! order. A node is a valid prefix; children extend it by one row, step,
//! diagonal or column, in increasing order of that item.

use crate::objects::{
    CoinFountain, Column, DyckPath, MotzkinPath, Object, ParallelogramPolyomino, Row,
    StanleyPolyomino, Step,
};

use super::{FamilyBound, Measure};

pub(super) trait Tree: Clone + Send + Sync + 'static {
    type Node: Clone + Send;
    fn root(&self) -> Self::Node;
    fn children(&self, node: &Self::Node) -> Vec<Self::Node>;
    fn emit(&self, node: &Self::Node) -> Option<Object>;
}

/// Explicit-stack pre-order walk.
pub(super) struct Dfs<T: Tree> {
    tree: T,
    stack: Vec<T::Node>,
}

impl<T: Tree> Dfs<T> {
    pub(super) fn new(tree: T, start: T::Node) -> Self {
        Self {
            tree,
            stack: vec![start],
        }
    }
}

impl<T: Tree> Iterator for Dfs<T> {
    type Item = Object;
    fn next(&mut self) -> Option<Object> {
        while let Some(node) = self.stack.pop() {
            let mut children = self.tree.children(&node);
            children.reverse();
            self.stack.extend(children);
            if let Some(obj) = self.tree.emit(&node) {
                return Some(obj);
            }
        }
        None
    }
}

#[derive(Clone, Default)]
pub(super) struct RowsNode {
    rows: Vec<Row>,
    area: usize,
}

#[derive(Clone)]
pub(super) struct StanleyTree {
    pub(super) measure: Measure,
    pub(super) n: usize,
}

impl StanleyTree {
    fn size(&self, end: usize, rows: usize, area: usize) -> usize {
        match self.measure {
            Measure::Columns => end,
            Measure::Semiperimeter => end + rows,
            _ => area,
        }
    }
}

impl Tree for StanleyTree {
    type Node = RowsNode;

    fn root(&self) -> RowsNode {
        RowsNode::default()
    }

    fn children(&self, node: &RowsNode) -> Vec<RowsNode> {
        let rows = node.rows.len() + 1;
        let mut out = Vec::new();
        let mut push = |start: usize, len: usize| {
            let mut next = node.clone();
            next.rows.push(Row { start, len });
            next.area += len;
            out.push(next);
        };
        match node.rows.last() {
            None => {
                for len in 1.. {
                    if self.size(len, 1, len) > self.n {
                        break;
                    }
                    push(0, len);
                }
            }
            Some(last) => {
                for start in last.start + 1..last.end() {
                    for end in last.end() + 1.. {
                        let len = end - start;
                        if self.size(end, rows, node.area + len) > self.n {
                            break;
                        }
                        push(start, len);
                    }
                }
            }
        }
        out
    }

    fn emit(&self, node: &RowsNode) -> Option<Object> {
        let last = node.rows.last()?;
        (self.size(last.end(), node.rows.len(), node.area) == self.n)
            .then(|| Object::Stanley(StanleyPolyomino::from_rows_unchecked(node.rows.clone())))
    }
}

#[derive(Clone, Default)]
pub(super) struct StepsNode {
    steps: Vec<Step>,
    height: usize,
}

impl StepsNode {
    fn push(&self, step: Step) -> Self {
        let mut next = self.clone();
        next.steps.push(step);
        match step {
            Step::U => next.height += 1,
            Step::D => next.height -= 1,
            Step::F => {}
        }
        next
    }
}

#[derive(Clone)]
pub(super) struct DyckTree {
    pub(super) semilength: usize,
}

impl Tree for DyckTree {
    type Node = StepsNode;

    fn root(&self) -> StepsNode {
        StepsNode::default()
    }

    fn children(&self, node: &StepsNode) -> Vec<StepsNode> {
        let left = 2 * self.semilength - node.steps.len();
        let mut out = Vec::new();
        if left == 0 {
            return out;
        }
        if node.height > 0 {
            out.push(node.push(Step::D));
        }
        if node.height + 1 < left {
            out.push(node.push(Step::U));
        }
        out
    }

    fn emit(&self, node: &StepsNode) -> Option<Object> {
        (node.steps.len() == 2 * self.semilength)
            .then(|| Object::Dyck(DyckPath::from_steps_unchecked(node.steps.clone())))
    }
}

#[derive(Clone)]
pub(super) struct PeaklessMotzkinTree {
    pub(super) steps: usize,
}

impl Tree for PeaklessMotzkinTree {
    type Node = StepsNode;

    fn root(&self) -> StepsNode {
        StepsNode::default()
    }

    fn children(&self, node: &StepsNode) -> Vec<StepsNode> {
        let left = self.steps - node.steps.len();
        let mut out = Vec::new();
        if left == 0 {
            return out;
        }
        let after_up = node.steps.last() == Some(&Step::U);
        let h = node.height;
        if h > 0 && !after_up {
            out.push(node.push(Step::D));
        }
        if h < left {
            out.push(node.push(Step::F));
        }
        // After an up step at height left - 1 only down steps remain,
        // which would create a peak.
        if h + 2 < left {
            out.push(node.push(Step::U));
        }
        out
    }

    fn emit(&self, node: &StepsNode) -> Option<Object> {
        (node.steps.len() == self.steps)
            .then(|| Object::Motzkin(MotzkinPath::from_steps_unchecked(node.steps.clone())))
    }
}

#[derive(Clone, Default)]
pub(super) struct DiagonalsNode {
    diagonals: Vec<usize>,
    size: usize,
}

#[derive(Clone)]
pub(super) struct FountainTree {
    pub(super) measure: Measure,
    pub(super) n: usize,
}

impl FountainTree {
    fn weight(&self, d: usize) -> usize {
        match self.measure {
            Measure::EvenCoins => d.div_ceil(2),
            _ => d,
        }
    }

    /// Smallest weight of a tail that brings a diagonal of size `d` down to
    /// the final single coin.
    fn tail(&self, d: usize) -> usize {
        (1..d).map(|k| self.weight(k)).sum()
    }
}

impl Tree for FountainTree {
    type Node = DiagonalsNode;

    fn root(&self) -> DiagonalsNode {
        DiagonalsNode::default()
    }

    fn children(&self, node: &DiagonalsNode) -> Vec<DiagonalsNode> {
        let lo = node
            .diagonals
            .last()
            .map_or(1, |&d| d.saturating_sub(1).max(1));
        let mut out = Vec::new();
        let mut push = |d: usize, size: usize| {
            let mut next = node.clone();
            next.diagonals.push(d);
            next.size = size;
            out.push(next);
        };
        if let Measure::Diagonals = self.measure {
            let j = node.diagonals.len() + 1;
            if j <= self.n {
                for d in lo..=self.n + 1 - j {
                    push(d, j);
                }
            }
        } else {
            for d in lo.. {
                let size = node.size + self.weight(d);
                if size + self.tail(d) > self.n {
                    break;
                }
                push(d, size);
            }
        }
        out
    }

    fn emit(&self, node: &DiagonalsNode) -> Option<Object> {
        (node.diagonals.last() == Some(&1) && node.size == self.n).then(|| {
            Object::Fountain(CoinFountain::from_diagonals_unchecked(
                node.diagonals.clone(),
            ))
        })
    }
}

#[derive(Clone, Default)]
pub(super) struct ColumnsNode {
    columns: Vec<Column>,
    area: usize,
}

#[derive(Clone)]
pub(super) struct ParallelogramTree {
    pub(super) area: usize,
}

impl Tree for ParallelogramTree {
    type Node = ColumnsNode;

    fn root(&self) -> ColumnsNode {
        ColumnsNode::default()
    }

    fn children(&self, node: &ColumnsNode) -> Vec<ColumnsNode> {
        let room = self.area - node.area;
        let mut out = Vec::new();
        let mut push = |bottom: usize, height: usize| {
            let mut next = node.clone();
            next.columns.push(Column { bottom, height });
            next.area += height;
            out.push(next);
        };
        match node.columns.last() {
            None => (1..=room).for_each(|h| push(0, h)),
            Some(last) => {
                for bottom in last.bottom..=last.top() {
                    for height in last.top() + 1 - bottom..=room {
                        push(bottom, height);
                    }
                }
            }
        }
        out
    }

    fn emit(&self, node: &ColumnsNode) -> Option<Object> {
        (!node.columns.is_empty() && node.area == self.area).then(|| {
            Object::Parallelogram(ParallelogramPolyomino::from_columns_unchecked(
                node.columns.clone(),
            ))
        })
    }
}

/// Runs `f` with the tree matching `bound`.
pub(super) fn with_tree<R>(bound: &FamilyBound, f: impl TreeVisitor<R>) -> R {
    use crate::objects::Family::*;
    let n = bound.value;
    match bound.family {
        Stanley => f.visit(StanleyTree {
            measure: bound.measure,
            n,
        }),
        Dyck => f.visit(DyckTree { semilength: n }),
        PeaklessMotzkin => f.visit(PeaklessMotzkinTree { steps: n }),
        Fountain => f.visit(FountainTree {
            measure: bound.measure,
            n,
        }),
        Parallelogram => f.visit(ParallelogramTree { area: n }),
    }
}

pub(super) trait TreeVisitor<R> {
    fn visit<T: Tree>(self, tree: T) -> R;
}
