//! Generic depth-first search with pluggable hooks.
//!
//! The driver follows the classic template: every node is tried as a root in
//! the order given, `tree_edge` fires when a node is first reached, each arc
//! out of it either descends (followed by `finish_tree_edge` once the child is
//! done) or is reported through `non_tree_edge`, and `finish_node` fires when
//! the scan of the node is complete.
//!
//! Three engines execute that template with identical hook sequences:
//!
//! * [`EngineKind::Recursive`] recurses on the call stack and scans the
//!   adjacency array in place, resuming the scan after every child returns.
//! * [`EngineKind::RecursiveEdgeStack`] recurses, but copies a node's arcs onto
//!   a shared stack on first visit so a resumed scan never touches the graph.
//! * [`EngineKind::Iterative`] uses the shared arc stack plus an explicit,
//!   heap-allocated frame stack. It never grows the OS stack and is the default.
//!
//! Hooks are a trait with an associated per-frame type, so dispatch is static
//! and each client chooses what it keeps "on the recursion stack".

use std::fmt;
use std::str::FromStr;

use crate::graph::{NodeId, StaticDigraph, StaticUndirectedGraph};

/// A graph the driver can traverse.
pub trait DfsGraph {
    /// What the driver stores per outgoing arc.
    type Arc: Copy + Default;
    type Arcs<'a>: DoubleEndedIterator<Item = Self::Arc> + ExactSizeIterator
    where
        Self: 'a;

    fn node_count(&self) -> usize;
    /// Total number of arcs; the capacity needed by the shared arc stack.
    fn arc_count(&self) -> usize;
    fn arcs(&self, v: NodeId) -> Self::Arcs<'_>;
    fn head(arc: Self::Arc) -> NodeId;
}

impl DfsGraph for StaticDigraph {
    type Arc = NodeId;
    type Arcs<'a> = std::iter::Copied<std::slice::Iter<'a, NodeId>>;

    #[inline]
    fn node_count(&self) -> usize {
        StaticDigraph::node_count(self)
    }

    #[inline]
    fn arc_count(&self) -> usize {
        self.edge_count()
    }

    #[inline]
    fn arcs(&self, v: NodeId) -> Self::Arcs<'_> {
        self.out_edges(v).iter().copied()
    }

    #[inline]
    fn head(arc: NodeId) -> NodeId {
        arc
    }
}

/// One direction of an undirected edge.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct UndirectedArc {
    pub target: NodeId,
    pub edge: u32,
}

pub struct UndirectedArcs<'a> {
    targets: std::slice::Iter<'a, NodeId>,
    edges: std::slice::Iter<'a, u32>,
}

impl Iterator for UndirectedArcs<'_> {
    type Item = UndirectedArc;

    #[inline]
    fn next(&mut self) -> Option<UndirectedArc> {
        Some(UndirectedArc {
            target: *self.targets.next()?,
            edge: *self.edges.next()?,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.targets.size_hint()
    }
}

impl DoubleEndedIterator for UndirectedArcs<'_> {
    #[inline]
    fn next_back(&mut self) -> Option<UndirectedArc> {
        Some(UndirectedArc {
            target: *self.targets.next_back()?,
            edge: *self.edges.next_back()?,
        })
    }
}

impl ExactSizeIterator for UndirectedArcs<'_> {}

impl DfsGraph for StaticUndirectedGraph {
    type Arc = UndirectedArc;
    type Arcs<'a> = UndirectedArcs<'a>;

    #[inline]
    fn node_count(&self) -> usize {
        StaticUndirectedGraph::node_count(self)
    }

    #[inline]
    fn arc_count(&self) -> usize {
        StaticUndirectedGraph::arc_count(self)
    }

    #[inline]
    fn arcs(&self, v: NodeId) -> UndirectedArcs<'_> {
        let r = self.arc_range(v);
        UndirectedArcs {
            targets: self.arc_targets()[r.clone()].iter(),
            edges: self.arc_edge_ids()[r].iter(),
        }
    }

    #[inline]
    fn head(arc: UndirectedArc) -> NodeId {
        arc.target
    }
}

/// Callbacks invoked by the driver.
///
/// `Frame` is client state that lives exactly as long as the visit of one
/// node: a DFS number, a lowpoint accumulator, the arc a node was entered by.
/// The driver keeps it on the call stack or in its explicit frame stack.
/// Hooks must not assume anything about the graph beyond what they are
/// handed, and the visited test must be answerable from their own state.
pub trait DfsHooks<G: DfsGraph + ?Sized> {
    type Frame: Copy + Default;

    fn is_unvisited(&self, v: NodeId) -> bool;

    fn init(&mut self) {}

    /// `v` has just been reached, through `entered_by` unless it is a root.
    fn tree_edge(&mut self, v: NodeId, entered_by: Option<G::Arc>) -> Self::Frame;

    /// `arc` leaves `u` and points at an already visited node.
    fn non_tree_edge(&mut self, frame: &mut Self::Frame, u: NodeId, arc: G::Arc);

    /// The visit started through `arc` out of `u` is complete; `child` is the
    /// child's frame after its `finish_node`.
    fn finish_tree_edge(
        &mut self,
        frame: &mut Self::Frame,
        child: Self::Frame,
        u: NodeId,
        arc: G::Arc,
    );

    fn finish_node(&mut self, frame: &mut Self::Frame, v: NodeId);
}

/// Fixed-capacity LIFO. Pushing onto a full stack panics.
#[derive(Clone)]
pub struct BoundedStack<T> {
    items: Box<[T]>,
    len: usize,
}

impl<T: Copy + Default> BoundedStack<T> {
    pub fn new(capacity: usize) -> Self {
        Self {
            items: vec![T::default(); capacity].into_boxed_slice(),
            len: 0,
        }
    }

    #[inline]
    pub fn push(&mut self, item: T) {
        if self.len == self.items.len() {
            overflow(self.items.len());
        }
        self.items[self.len] = item;
        self.len += 1;
    }

    /// Pops the top item. Panics when empty.
    #[inline]
    pub fn pop(&mut self) -> T {
        self.len = self.len.checked_sub(1).expect("pop on empty BoundedStack");
        self.items[self.len]
    }

    #[inline]
    pub fn top(&self) -> T {
        self.items[self.len.checked_sub(1).expect("top of empty BoundedStack")]
    }

    #[inline]
    pub fn top_mut(&mut self) -> &mut T {
        let i = self.len.checked_sub(1).expect("top of empty BoundedStack");
        &mut self.items[i]
    }

    /// Pushes `items` so that popping returns them in iteration order.
    #[inline]
    pub fn push_reversed<I>(&mut self, items: I)
    where
        I: DoubleEndedIterator<Item = T> + ExactSizeIterator,
    {
        let k = items.len();
        if k > self.items.len() - self.len {
            overflow(self.items.len());
        }
        for (slot, item) in self.items[self.len..self.len + k]
            .iter_mut()
            .zip(items.rev())
        {
            *slot = item;
        }
        self.len += k;
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn capacity(&self) -> usize {
        self.items.len()
    }

    pub fn clear(&mut self) {
        self.len = 0;
    }

    /// Items from bottom to top.
    pub fn as_slice(&self) -> &[T] {
        &self.items[..self.len]
    }
}

impl<T: fmt::Debug> fmt::Debug for BoundedStack<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.items[..self.len]).finish()
    }
}

#[cold]
#[inline(never)]
fn overflow(capacity: usize) -> ! {
    panic!("BoundedStack overflow (capacity {capacity})")
}

/// Copies the arcs of `v` onto `stack`, last arc first, so that popping
/// yields them in adjacency order. Returns the stack size before the push;
/// the arcs of `v` are exhausted once the stack shrinks back to it.
#[inline]
pub fn push_out_edges_reversed<G: DfsGraph + ?Sized>(
    g: &G,
    v: NodeId,
    stack: &mut BoundedStack<G::Arc>,
) -> usize {
    let watermark = stack.len();
    stack.push_reversed(g.arcs(v));
    watermark
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EngineKind {
    Recursive,
    RecursiveEdgeStack,
    #[default]
    Iterative,
}

impl EngineKind {
    pub const ALL: [EngineKind; 3] = [
        EngineKind::Recursive,
        EngineKind::RecursiveEdgeStack,
        EngineKind::Iterative,
    ];

    pub fn is_recursive(self) -> bool {
        !matches!(self, EngineKind::Iterative)
    }

    pub fn uses_edge_stack(self) -> bool {
        !matches!(self, EngineKind::Recursive)
    }

    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Recursive => "recursive",
            EngineKind::RecursiveEdgeStack => "recursive-edge-stack",
            EngineKind::Iterative => "iterative",
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        EngineKind::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown engine {s:?}"))
    }
}

/// Bookkeeping returned by a traversal.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraversalStats {
    /// Arcs copied onto the shared stack (zero for the plain recursive engine).
    pub arcs_pushed: usize,
    /// Largest size the shared arc stack reached.
    pub peak_arc_stack: usize,
    /// Size of the arc stack once the traversal ended.
    pub final_arc_stack: usize,
}

/// Runs `init`, then a DFS from every still-unvisited node in increasing id
/// order.
pub fn dfs_all<G, H>(g: &G, hooks: &mut H, engine: EngineKind) -> TraversalStats
where
    G: DfsGraph + ?Sized,
    H: DfsHooks<G>,
{
    hooks.init();
    traverse(g, hooks, engine, 0..g.node_count() as NodeId)
}

/// Tries each node of `roots` in turn and runs a DFS from those still
/// unvisited. Does not call `init`.
pub fn traverse<G, H, R>(g: &G, hooks: &mut H, engine: EngineKind, roots: R) -> TraversalStats
where
    G: DfsGraph + ?Sized,
    H: DfsHooks<G>,
    R: IntoIterator<Item = NodeId>,
{
    match engine {
        EngineKind::Recursive => {
            for r in roots {
                if hooks.is_unvisited(r) {
                    recurse_in_place(g, hooks, r, None);
                }
            }
            TraversalStats::default()
        }
        EngineKind::RecursiveEdgeStack => {
            let mut run = EdgeStackRun::new(g);
            for r in roots {
                if hooks.is_unvisited(r) {
                    recurse_with_edge_stack(g, hooks, &mut run, r, None);
                }
            }
            run.finish()
        }
        EngineKind::Iterative => {
            let mut run = EdgeStackRun::new(g);
            let mut frames = BoundedStack::new(g.node_count());
            for r in roots {
                if hooks.is_unvisited(r) {
                    iterate(g, hooks, &mut run, &mut frames, r);
                }
            }
            run.finish()
        }
    }
}

struct EdgeStackRun<A> {
    stack: BoundedStack<A>,
    pushed: usize,
    peak: usize,
}

impl<A: Copy + Default> EdgeStackRun<A> {
    fn new<G: DfsGraph<Arc = A> + ?Sized>(g: &G) -> Self {
        Self {
            stack: BoundedStack::new(g.arc_count()),
            pushed: 0,
            peak: 0,
        }
    }

    #[inline]
    fn push_arcs<G: DfsGraph<Arc = A> + ?Sized>(&mut self, g: &G, v: NodeId) -> usize {
        let watermark = push_out_edges_reversed(g, v, &mut self.stack);
        let len = self.stack.len();
        self.pushed += len - watermark;
        self.peak = self.peak.max(len);
        watermark
    }

    fn finish(self) -> TraversalStats {
        TraversalStats {
            arcs_pushed: self.pushed,
            peak_arc_stack: self.peak,
            final_arc_stack: self.stack.len(),
        }
    }
}

fn recurse_in_place<G, H>(g: &G, hooks: &mut H, v: NodeId, entered_by: Option<G::Arc>) -> H::Frame
where
    G: DfsGraph + ?Sized,
    H: DfsHooks<G>,
{
    let mut frame = hooks.tree_edge(v, entered_by);
    for arc in g.arcs(v) {
        let w = G::head(arc);
        if hooks.is_unvisited(w) {
            let child = recurse_in_place(g, hooks, w, Some(arc));
            hooks.finish_tree_edge(&mut frame, child, v, arc);
        } else {
            hooks.non_tree_edge(&mut frame, v, arc);
        }
    }
    hooks.finish_node(&mut frame, v);
    frame
}

fn recurse_with_edge_stack<G, H>(
    g: &G,
    hooks: &mut H,
    run: &mut EdgeStackRun<G::Arc>,
    v: NodeId,
    entered_by: Option<G::Arc>,
) -> H::Frame
where
    G: DfsGraph + ?Sized,
    H: DfsHooks<G>,
{
    let mut frame = hooks.tree_edge(v, entered_by);
    let watermark = run.push_arcs(g, v);
    while run.stack.len() > watermark {
        let arc = run.stack.pop();
        let w = G::head(arc);
        if hooks.is_unvisited(w) {
            let child = recurse_with_edge_stack(g, hooks, run, w, Some(arc));
            hooks.finish_tree_edge(&mut frame, child, v, arc);
        } else {
            hooks.non_tree_edge(&mut frame, v, arc);
        }
    }
    hooks.finish_node(&mut frame, v);
    frame
}

#[derive(Clone, Copy)]
struct IterFrame<F, A> {
    node: NodeId,
    watermark: usize,
    entered_by: A,
    client: F,
}

impl<F: Default, A: Default> Default for IterFrame<F, A> {
    fn default() -> Self {
        Self {
            node: 0,
            watermark: 0,
            entered_by: A::default(),
            client: F::default(),
        }
    }
}

fn iterate<G, H>(
    g: &G,
    hooks: &mut H,
    run: &mut EdgeStackRun<G::Arc>,
    frames: &mut BoundedStack<IterFrame<H::Frame, G::Arc>>,
    root: NodeId,
) where
    G: DfsGraph + ?Sized,
    H: DfsHooks<G>,
{
    let client = hooks.tree_edge(root, None);
    let watermark = run.push_arcs(g, root);
    frames.push(IterFrame {
        node: root,
        watermark,
        entered_by: G::Arc::default(),
        client,
    });
    loop {
        let top = frames.top_mut();
        if run.stack.len() > top.watermark {
            let arc = run.stack.pop();
            let w = G::head(arc);
            if hooks.is_unvisited(w) {
                let client = hooks.tree_edge(w, Some(arc));
                let watermark = run.push_arcs(g, w);
                frames.push(IterFrame {
                    node: w,
                    watermark,
                    entered_by: arc,
                    client,
                });
            } else {
                hooks.non_tree_edge(&mut top.client, top.node, arc);
            }
        } else {
            let mut done = frames.pop();
            hooks.finish_node(&mut done.client, done.node);
            if frames.is_empty() {
                return;
            }
            let parent = frames.top_mut();
            hooks.finish_tree_edge(
                &mut parent.client,
                done.client,
                parent.node,
                done.entered_by,
            );
        }
    }
}

/// Rough upper bound on the call-stack bytes one level of a recursive engine
/// needs in an optimized build.
pub const RECURSIVE_FRAME_BYTES: usize = 192;

/// Stack size to request for a recursive engine on a graph with `n` nodes.
pub fn recursive_stack_bytes(n: usize) -> usize {
    (n + 1024)
        .saturating_mul(RECURSIVE_FRAME_BYTES)
        .saturating_add(8 << 20)
}

/// Runs `f` on a scoped thread whose stack holds `bytes`, for the recursive
/// engines on deep graphs.
pub fn with_stack<T: Send>(bytes: usize, f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .name("dfs-deep-stack".into())
            .stack_size(bytes)
            .spawn_scoped(s, f)
            .expect("spawn deep-stack thread")
            .join()
            .unwrap_or_else(|payload| std::panic::resume_unwind(payload))
    })
}

/// One recorded hook call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookEvent {
    Init,
    TreeEdge(NodeId),
    NonTreeEdge(NodeId, NodeId),
    FinishTreeEdge(NodeId, NodeId),
    FinishNode(NodeId),
}

/// Hooks that only mark nodes visited and log every call.
#[derive(Debug, Clone, Default)]
pub struct Transcript {
    visited: Vec<bool>,
    pub events: Vec<HookEvent>,
}

impl Transcript {
    pub fn new(n: usize) -> Self {
        Self {
            visited: vec![false; n],
            events: Vec::new(),
        }
    }

    pub fn record<G: DfsGraph + ?Sized>(g: &G, engine: EngineKind) -> Vec<HookEvent> {
        let mut t = Transcript::new(g.node_count());
        dfs_all(g, &mut t, engine);
        t.events
    }
}

impl<G: DfsGraph + ?Sized> DfsHooks<G> for Transcript {
    type Frame = ();

    fn is_unvisited(&self, v: NodeId) -> bool {
        !self.visited[v as usize]
    }

    fn init(&mut self) {
        self.events.push(HookEvent::Init);
    }

    fn tree_edge(&mut self, v: NodeId, _: Option<G::Arc>) {
        self.visited[v as usize] = true;
        self.events.push(HookEvent::TreeEdge(v));
    }

    fn non_tree_edge(&mut self, _: &mut (), u: NodeId, arc: G::Arc) {
        self.events.push(HookEvent::NonTreeEdge(u, G::head(arc)));
    }

    fn finish_tree_edge(&mut self, _: &mut (), _: (), u: NodeId, arc: G::Arc) {
        self.events.push(HookEvent::FinishTreeEdge(u, G::head(arc)));
    }

    fn finish_node(&mut self, _: &mut (), v: NodeId) {
        self.events.push(HookEvent::FinishNode(v));
    }
}
