//! Tree-walking interpreter over the parsed method body.
//!
//! Values are kept with their Java static type so that assignment, compound
//! assignment and string conversion follow the language rules. Anything the
//! interpreter does not model raises `Trap::Unsupported` instead of guessing.

use std::cell::RefCell;
use std::rc::Rc;

use sect_java::ast;
use sect_java::{NodeId, NodeKind, SyntaxTree, TokenKind};

use crate::snippet::{first_method, JType, SnippetSpec};
use crate::{EquivError, ExecResult, Trap, Value};

use NodeKind::*;

pub const DEFAULT_STEP_LIMIT: u64 = 1_000_000;

/// Arrays larger than this are charged as exceeding any sane budget.
const MAX_ARRAY: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ty {
    Int,
    Long,
    Bool,
    Char,
    Str,
    Arr,
}

impl From<JType> for Ty {
    fn from(t: JType) -> Ty {
        match t {
            JType::Int => Ty::Int,
            JType::Long => Ty::Long,
            JType::Boolean => Ty::Bool,
            JType::Str => Ty::Str,
            JType::IntArray => Ty::Arr,
        }
    }
}

type Array = Rc<RefCell<Vec<i32>>>;

#[derive(Clone, Debug)]
enum Val {
    Int(i32),
    Long(i64),
    Bool(bool),
    Char(u16),
    Str(Rc<[u16]>),
    Arr(Array),
}

/// Result of binary numeric promotion.
#[derive(Clone, Copy)]
enum Num {
    I(i32),
    L(i64),
}

impl Val {
    fn num(&self) -> Option<Num> {
        match *self {
            Val::Int(x) => Some(Num::I(x)),
            Val::Char(c) => Some(Num::I(i32::from(c))),
            Val::Long(x) => Some(Num::L(x)),
            _ => None,
        }
    }

    fn from_value(v: &Value) -> Val {
        match v {
            Value::Int(x) => Val::Int(*x),
            Value::Long(x) => Val::Long(*x),
            Value::Boolean(b) => Val::Bool(*b),
            Value::Str(s) => Val::Str(s.encode_utf16().collect()),
            Value::IntArray(xs) => Val::Arr(Rc::new(RefCell::new(xs.clone()))),
        }
    }

    fn into_value(self) -> Option<Value> {
        Some(match self {
            Val::Int(x) => Value::Int(x),
            Val::Long(x) => Value::Long(x),
            Val::Bool(b) => Value::Boolean(b),
            Val::Str(s) => Value::Str(String::from_utf16_lossy(&s)),
            Val::Arr(a) => Value::IntArray(a.borrow().clone()),
            Val::Char(_) => return None,
        })
    }
}

type R<T> = Result<T, Trap>;

const UNSUPPORTED: Trap = Trap::Unsupported;

enum Flow {
    Normal,
    Break(Option<String>),
    Continue(Option<String>),
    Return(Val),
}

enum LoopCtl {
    Next,
    Exit,
    Leave(Flow),
}

fn loop_ctl(flow: Flow, label: Option<&str>) -> LoopCtl {
    match flow {
        Flow::Normal | Flow::Continue(None) => LoopCtl::Next,
        Flow::Continue(Some(l)) if Some(l.as_str()) == label => LoopCtl::Next,
        Flow::Break(None) => LoopCtl::Exit,
        other => LoopCtl::Leave(other),
    }
}

struct Slot {
    name: String,
    ty: Ty,
    val: Option<Val>,
}

enum Loc {
    Var(usize),
    Elem(Array, i32),
}

struct Machine<'t> {
    tree: &'t SyntaxTree,
    vars: Vec<Slot>,
    marks: Vec<usize>,
    steps: u64,
    limit: u64,
}

/// A parsed snippet ready to run.
pub(crate) struct Program {
    tree: SyntaxTree,
    body: NodeId,
    spec: SnippetSpec,
}

impl Program {
    pub(crate) fn new(spec: &SnippetSpec) -> Result<Program, EquivError> {
        let tree = sect_java::parse(&spec.to_source());
        if tree.error_count() > 0 {
            return Err(EquivError::Syntax(tree.error_count()));
        }
        let m = first_method(&tree).ok_or(EquivError::NoMethod)?;
        let body = tree.child_of_kind(m, Block).ok_or(EquivError::NoMethod)?;
        Ok(Program {
            tree,
            body,
            spec: spec.clone(),
        })
    }

    pub(crate) fn run(&self, args: &[Value], limit: u64) -> Result<ExecResult, EquivError> {
        let params = &self.spec.params;
        if args.len() != params.len() || args.iter().zip(params).any(|(a, p)| a.ty() != p.ty) {
            return Err(EquivError::BadArguments);
        }
        let mut m = Machine {
            tree: &self.tree,
            vars: params
                .iter()
                .zip(args)
                .map(|(p, a)| Slot {
                    name: p.name.clone(),
                    ty: p.ty.into(),
                    val: Some(Val::from_value(a)),
                })
                .collect(),
            marks: Vec::new(),
            steps: 0,
            limit,
        };
        let outcome = m.stmt(self.body, None).and_then(|flow| match flow {
            Flow::Return(v) => assign_convert(self.spec.ret.into(), v),
            _ => Err(UNSUPPORTED),
        });
        Ok(match outcome {
            Ok(v) => v.into_value().map_or(ExecResult::trap(UNSUPPORTED), ExecResult::value),
            Err(t) => ExecResult::trap(t),
        })
    }
}

/// Runs the snippet on `args` with a budget of `step_limit` evaluation steps.
pub fn evaluate(spec: &SnippetSpec, args: &[Value], step_limit: u64) -> Result<ExecResult, EquivError> {
    Program::new(spec)?.run(args, step_limit)
}

fn local_ty(text: &str) -> R<Ty> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    Ok(match compact.as_str() {
        "char" => Ty::Char,
        other => JType::parse(other).ok_or(UNSUPPORTED)?.into(),
    })
}

impl Machine<'_> {
    fn tick(&mut self, n: u64) -> R<()> {
        self.steps = self.steps.saturating_add(n);
        if self.steps > self.limit {
            Err(Trap::StepLimit)
        } else {
            Ok(())
        }
    }

    fn push(&mut self) {
        self.marks.push(self.vars.len());
    }

    fn pop(&mut self) {
        let m = self.marks.pop().expect("balanced scopes");
        self.vars.truncate(m);
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        self.vars.iter().rposition(|s| s.name == name)
    }

    fn scoped<T>(&mut self, f: impl FnOnce(&mut Self) -> R<T>) -> R<T> {
        self.push();
        let out = f(self);
        self.pop();
        out
    }

    // ---- statements

    fn stmt(&mut self, n: NodeId, label: Option<&str>) -> R<Flow> {
        self.tick(1)?;
        let t = self.tree;
        match t.kind(n) {
            Block => self.scoped(|m| m.stmts(&ast::statements(t, n))),
            LocalVarDecl => self.declare(n).map(|()| Flow::Normal),
            ExprStmt => {
                let e = t.child_nodes(n).next().ok_or(UNSUPPORTED)?;
                self.expr(e).map(|_| Flow::Normal)
            }
            EmptyStmt => Ok(Flow::Normal),
            IfStmt => {
                let p = ast::if_parts(t, n).ok_or(UNSUPPORTED)?;
                if self.cond(p.cond)? {
                    self.stmt(p.then, None)
                } else if let Some(e) = p.else_ {
                    self.stmt(e, None)
                } else {
                    Ok(Flow::Normal)
                }
            }
            WhileStmt => {
                let (c, body) = ast::loop_cond_body(t, n).ok_or(UNSUPPORTED)?;
                while self.cond(c)? {
                    match loop_ctl(self.stmt(body, None)?, label) {
                        LoopCtl::Next => {}
                        LoopCtl::Exit => break,
                        LoopCtl::Leave(f) => return Ok(f),
                    }
                }
                Ok(Flow::Normal)
            }
            DoStmt => {
                let (c, body) = ast::loop_cond_body(t, n).ok_or(UNSUPPORTED)?;
                loop {
                    match loop_ctl(self.stmt(body, None)?, label) {
                        LoopCtl::Next => {}
                        LoopCtl::Exit => break,
                        LoopCtl::Leave(f) => return Ok(f),
                    }
                    if !self.cond(c)? {
                        break;
                    }
                }
                Ok(Flow::Normal)
            }
            ForStmt => self.scoped(|m| m.for_loop(n, label)),
            ForEachStmt => self.for_each(n, label),
            SwitchStmt => self.switch(n),
            BreakStmt | ContinueStmt => {
                let target = t
                    .child_tokens(n)
                    .find(|&k| t.token_kind(k) == TokenKind::Ident)
                    .map(|k| t.token_text(k).to_owned());
                Ok(if t.kind(n) == BreakStmt {
                    Flow::Break(target)
                } else {
                    Flow::Continue(target)
                })
            }
            ReturnStmt => {
                let e = t.child_nodes(n).next().ok_or(UNSUPPORTED)?;
                Ok(Flow::Return(self.expr(e)?))
            }
            LabeledStmt => {
                let name = ast::name(t, n).ok_or(UNSUPPORTED)?;
                let inner = t.child_nodes(n).next().ok_or(UNSUPPORTED)?;
                match self.stmt(inner, Some(name))? {
                    Flow::Break(Some(l)) if l == name => Ok(Flow::Normal),
                    f => Ok(f),
                }
            }
            _ => Err(UNSUPPORTED),
        }
    }

    fn stmts(&mut self, list: &[NodeId]) -> R<Flow> {
        for &s in list {
            match self.stmt(s, None)? {
                Flow::Normal => {}
                f => return Ok(f),
            }
        }
        Ok(Flow::Normal)
    }

    /// Declarations of a `LocalVarDecl` or a declaring `ForInit`.
    fn declare(&mut self, n: NodeId) -> R<()> {
        let t = self.tree;
        let base = local_ty(t.text(ast::declared_type(t, n).ok_or(UNSUPPORTED)?))?;
        for d in ast::declarators(t, n) {
            let ty = match (ast::declarator_has_dims(t, d), base) {
                (false, ty) => ty,
                (true, Ty::Int) => Ty::Arr,
                _ => return Err(UNSUPPORTED),
            };
            let name = ast::name(t, d).ok_or(UNSUPPORTED)?.to_owned();
            let val = match ast::declarator_init(t, d) {
                None => None,
                Some(e) if t.kind(e) == ArrayInit && ty == Ty::Arr => Some(self.array_init(e)?),
                Some(e) => {
                    let v = self.expr(e)?;
                    Some(assign_convert(ty, v)?)
                }
            };
            self.vars.push(Slot { name, ty, val });
        }
        Ok(())
    }

    fn for_loop(&mut self, n: NodeId, label: Option<&str>) -> R<Flow> {
        let t = self.tree;
        let p = ast::for_parts(t, n).ok_or(UNSUPPORTED)?;
        if let Some(init) = p.init {
            if t.child_of_kind(init, Type).is_some() {
                self.declare(init)?;
            } else {
                for e in t.child_nodes(init) {
                    self.expr(e)?;
                }
            }
        }
        loop {
            if let Some(c) = p.cond {
                if !self.cond(c)? {
                    break;
                }
            }
            match loop_ctl(self.stmt(p.body, None)?, label) {
                LoopCtl::Next => {}
                LoopCtl::Exit => break,
                LoopCtl::Leave(f) => return Ok(f),
            }
            if let Some(u) = p.update {
                for e in t.child_nodes(u) {
                    self.expr(e)?;
                }
            }
        }
        Ok(Flow::Normal)
    }

    fn for_each(&mut self, n: NodeId, label: Option<&str>) -> R<Flow> {
        let t = self.tree;
        let nodes: Vec<NodeId> = t.child_nodes(n).collect();
        let [param, source, body] = nodes[..] else {
            return Err(UNSUPPORTED);
        };
        let ty = local_ty(t.text(t.child_of_kind(param, Type).ok_or(UNSUPPORTED)?))?;
        let name = ast::name(t, param).ok_or(UNSUPPORTED)?.to_owned();
        let Val::Arr(arr) = self.expr(source)? else {
            return Err(UNSUPPORTED);
        };
        let len = arr.borrow().len();
        for i in 0..len {
            let item = assign_convert(ty, Val::Int(arr.borrow()[i]))?;
            self.push();
            self.vars.push(Slot {
                name: name.clone(),
                ty,
                val: Some(item),
            });
            let flow = self.stmt(body, None);
            self.pop();
            match loop_ctl(flow?, label) {
                LoopCtl::Next => {}
                LoopCtl::Exit => break,
                LoopCtl::Leave(f) => return Ok(f),
            }
        }
        Ok(Flow::Normal)
    }

    fn switch(&mut self, n: NodeId) -> R<Flow> {
        let t = self.tree;
        let scrutinee = t.child_nodes(n).next().ok_or(UNSUPPORTED)?;
        let key = self.expr(scrutinee)?;
        if !matches!(key, Val::Int(_) | Val::Char(_) | Val::Str(_)) {
            return Err(UNSUPPORTED);
        }
        let groups: Vec<NodeId> = t.children_of_kind(n, SwitchGroup).collect();
        let mut start = None;
        let mut default = None;
        'find: for (gi, &g) in groups.iter().enumerate() {
            for label in t.children_of_kind(g, SwitchLabel) {
                let Some(c) = t.child_nodes(label).next() else {
                    default = Some(gi);
                    continue;
                };
                let v = self.expr(c)?;
                let hit = match (&key, &v) {
                    (Val::Str(a), Val::Str(b)) => a == b,
                    (a, b) => match (a.num(), b.num()) {
                        (Some(Num::I(x)), Some(Num::I(y))) => x == y,
                        _ => return Err(UNSUPPORTED),
                    },
                };
                if hit {
                    start = Some(gi);
                    break 'find;
                }
            }
        }
        let Some(start) = start.or(default) else {
            return Ok(Flow::Normal);
        };
        self.scoped(|m| {
            for &g in &groups[start..] {
                match m.stmts(&ast::statements(t, g))? {
                    Flow::Normal => {}
                    Flow::Break(None) => return Ok(Flow::Normal),
                    f => return Ok(f),
                }
            }
            Ok(Flow::Normal)
        })
    }

    // ---- expressions

    fn cond(&mut self, e: NodeId) -> R<bool> {
        match self.expr(e)? {
            Val::Bool(b) => Ok(b),
            _ => Err(UNSUPPORTED),
        }
    }

    fn expr(&mut self, n: NodeId) -> R<Val> {
        self.tick(1)?;
        let t = self.tree;
        match t.kind(n) {
            Literal => literal(t, n),
            NameExpr => {
                let name = ast::name(t, n).ok_or(UNSUPPORTED)?;
                let i = self.lookup(name).ok_or(UNSUPPORTED)?;
                self.vars[i].val.clone().ok_or(UNSUPPORTED)
            }
            ParenExpr => self.expr(ast::operand(t, n).ok_or(UNSUPPORTED)?),
            BinaryExpr => {
                let (a, b) = ast::operands(t, n).ok_or(UNSUPPORTED)?;
                match ast::binary_op(t, n).as_str() {
                    "&&" => Ok(Val::Bool(self.cond(a)? && self.cond(b)?)),
                    "||" => Ok(Val::Bool(self.cond(a)? || self.cond(b)?)),
                    op => {
                        let l = self.expr(a)?;
                        let r = self.expr(b)?;
                        binary(op, l, r)
                    }
                }
            }
            PrefixExpr => {
                let x = ast::operand(t, n).ok_or(UNSUPPORTED)?;
                match ast::operator(t, n).as_str() {
                    "++" => self.step_var(x, 1, true),
                    "--" => self.step_var(x, -1, true),
                    op => {
                        let v = self.expr(x)?;
                        unary(op, v)
                    }
                }
            }
            PostfixExpr => {
                let x = ast::operand(t, n).ok_or(UNSUPPORTED)?;
                match ast::operator(t, n).as_str() {
                    "++" => self.step_var(x, 1, false),
                    "--" => self.step_var(x, -1, false),
                    _ => Err(UNSUPPORTED),
                }
            }
            AssignExpr => self.assign(n),
            ConditionalExpr => {
                let nodes: Vec<NodeId> = t.child_nodes(n).collect();
                let [c, a, b] = nodes[..] else {
                    return Err(UNSUPPORTED);
                };
                let (chosen, other) = if self.cond(c)? { (a, b) } else { (b, a) };
                let v = self.expr(chosen)?;
                // A long on the other side widens the int result.
                match (v, static_kind(t, other)) {
                    (Val::Int(x), Some(Ty::Long)) => Ok(Val::Long(i64::from(x))),
                    (v, _) => Ok(v),
                }
            }
            CastExpr => {
                let ty = local_ty(t.text(t.child_of_kind(n, Type).ok_or(UNSUPPORTED)?))?;
                let v = self.expr(ast::operand(t, n).ok_or(UNSUPPORTED)?)?;
                cast(ty, v)
            }
            ArrayAccess => {
                let loc = self.place(n)?;
                self.load(&loc)
            }
            FieldAccess => self.field(n),
            MethodCall => self.call(n),
            ArrayCreation => self.new_array(n),
            _ => Err(UNSUPPORTED),
        }
    }

    fn place(&mut self, n: NodeId) -> R<Loc> {
        let t = self.tree;
        let n = ast::unparen(t, n);
        match t.kind(n) {
            NameExpr => {
                let name = ast::name(t, n).ok_or(UNSUPPORTED)?;
                self.lookup(name).map(Loc::Var).ok_or(UNSUPPORTED)
            }
            ArrayAccess => {
                let (a, i) = ast::operands(t, n).ok_or(UNSUPPORTED)?;
                let Val::Arr(arr) = self.expr(a)? else {
                    return Err(UNSUPPORTED);
                };
                match self.expr(i)?.num() {
                    Some(Num::I(ix)) => Ok(Loc::Elem(arr, ix)),
                    _ => Err(UNSUPPORTED),
                }
            }
            _ => Err(UNSUPPORTED),
        }
    }

    fn loc_ty(&self, loc: &Loc) -> Ty {
        match loc {
            Loc::Var(i) => self.vars[*i].ty,
            Loc::Elem(..) => Ty::Int,
        }
    }

    fn load(&self, loc: &Loc) -> R<Val> {
        match loc {
            Loc::Var(i) => self.vars[*i].val.clone().ok_or(UNSUPPORTED),
            Loc::Elem(arr, ix) => {
                let arr = arr.borrow();
                usize::try_from(*ix)
                    .ok()
                    .and_then(|i| arr.get(i).copied())
                    .map(Val::Int)
                    .ok_or(Trap::IndexOutOfBounds)
            }
        }
    }

    /// Stores an already converted value.
    fn store(&mut self, loc: &Loc, v: Val) -> R<()> {
        match loc {
            Loc::Var(i) => {
                self.vars[*i].val = Some(v);
                Ok(())
            }
            Loc::Elem(arr, ix) => {
                let Val::Int(x) = v else {
                    return Err(UNSUPPORTED);
                };
                let mut arr = arr.borrow_mut();
                let slot = usize::try_from(*ix)
                    .ok()
                    .and_then(|i| arr.get_mut(i))
                    .ok_or(Trap::IndexOutOfBounds)?;
                *slot = x;
                Ok(())
            }
        }
    }

    fn step_var(&mut self, target: NodeId, delta: i32, prefix: bool) -> R<Val> {
        let loc = self.place(target)?;
        let old = self.load(&loc)?;
        let new = match old {
            Val::Int(x) => Val::Int(x.wrapping_add(delta)),
            Val::Long(x) => Val::Long(x.wrapping_add(i64::from(delta))),
            Val::Char(c) => Val::Char(c.wrapping_add(delta as u16)),
            _ => return Err(UNSUPPORTED),
        };
        self.store(&loc, new.clone())?;
        Ok(if prefix { new } else { old })
    }

    fn assign(&mut self, n: NodeId) -> R<Val> {
        let t = self.tree;
        let (target, rhs) = ast::operands(t, n).ok_or(UNSUPPORTED)?;
        let op = ast::operator(t, n);
        let loc = self.place(target)?;
        let ty = self.loc_ty(&loc);
        let v = if op == "=" {
            let v = self.expr(rhs)?;
            assign_convert(ty, v)?
        } else {
            let old = self.load(&loc)?;
            let r = self.expr(rhs)?;
            let bin = op.strip_suffix('=').ok_or(UNSUPPORTED)?;
            cast(ty, binary(bin, old, r)?)?
        };
        self.store(&loc, v.clone())?;
        Ok(v)
    }

    fn array_init(&mut self, n: NodeId) -> R<Val> {
        let t = self.tree;
        let mut items = Vec::new();
        for e in t.child_nodes(n) {
            match assign_convert(Ty::Int, self.expr(e)?)? {
                Val::Int(x) => items.push(x),
                _ => return Err(UNSUPPORTED),
            }
        }
        Ok(Val::Arr(Rc::new(RefCell::new(items))))
    }

    fn new_array(&mut self, n: NodeId) -> R<Val> {
        let t = self.tree;
        let ty = t.child_of_kind(n, Type).ok_or(UNSUPPORTED)?;
        let dims = t.child_tokens(n).filter(|&k| t.token_text(k) == "[").count();
        if t.text(ty) != "int" || dims != 1 {
            return Err(UNSUPPORTED);
        }
        if let Some(init) = t.child_of_kind(n, ArrayInit) {
            return self.array_init(init);
        }
        let size = t.child_nodes(n).find(|&c| c != ty).ok_or(UNSUPPORTED)?;
        let len = match self.expr(size)?.num() {
            Some(Num::I(x)) => usize::try_from(x).map_err(|_| UNSUPPORTED)?,
            _ => return Err(UNSUPPORTED),
        };
        if len > MAX_ARRAY {
            return Err(Trap::StepLimit);
        }
        // Zero-filling costs one step per element.
        self.tick(len as u64)?;
        Ok(Val::Arr(Rc::new(RefCell::new(vec![0; len]))))
    }

    /// True when `n` names a class rather than a local.
    fn class_name(&self, n: NodeId, names: &[&str]) -> Option<&'static str> {
        let t = self.tree;
        if t.kind(n) != NameExpr {
            return None;
        }
        let name = ast::name(t, n)?;
        if self.lookup(name).is_some() {
            return None;
        }
        ["Math", "Integer", "Long", "String", "Character"]
            .into_iter()
            .find(|&c| c == name && names.contains(&c))
    }

    fn field(&mut self, n: NodeId) -> R<Val> {
        let t = self.tree;
        let target = t.child_nodes(n).next().ok_or(UNSUPPORTED)?;
        let field = t.last_token(n).map(|k| t.token_text(k)).ok_or(UNSUPPORTED)?;
        if let Some(class) = self.class_name(target, &["Integer", "Long"]) {
            return match (class, field) {
                ("Integer", "MAX_VALUE") => Ok(Val::Int(i32::MAX)),
                ("Integer", "MIN_VALUE") => Ok(Val::Int(i32::MIN)),
                ("Long", "MAX_VALUE") => Ok(Val::Long(i64::MAX)),
                ("Long", "MIN_VALUE") => Ok(Val::Long(i64::MIN)),
                _ => Err(UNSUPPORTED),
            };
        }
        match (self.expr(target)?, field) {
            (Val::Arr(a), "length") => Ok(Val::Int(a.borrow().len() as i32)),
            _ => Err(UNSUPPORTED),
        }
    }

    fn call(&mut self, n: NodeId) -> R<Val> {
        let t = self.tree;
        let parts = ast::call_parts(t, n).ok_or(UNSUPPORTED)?;
        let recv = parts.receiver.ok_or(UNSUPPORTED)?;
        let name = t.token_text(parts.name);
        if let Some(class) = self.class_name(recv, &["Math", "Integer", "String", "Character"]) {
            let args = self.args(&parts.args)?;
            return static_call(class, name, &args);
        }
        let Val::Str(s) = self.expr(recv)? else {
            return Err(UNSUPPORTED);
        };
        let args = self.args(&parts.args)?;
        string_method(&s, name, &args)
    }

    fn args(&mut self, nodes: &[NodeId]) -> R<Vec<Val>> {
        nodes.iter().map(|&a| self.expr(a)).collect()
    }
}

/// Static type of simple expressions, used only to widen conditional results.
fn static_kind(t: &SyntaxTree, n: NodeId) -> Option<Ty> {
    let n = ast::unparen(t, n);
    match t.kind(n) {
        Literal => {
            let text = t.text(n);
            let k = t.token_kind(t.first_token(n)?);
            (k == TokenKind::IntLiteral && text.ends_with(['l', 'L'])).then_some(Ty::Long)
        }
        CastExpr => local_ty(t.text(t.child_of_kind(n, Type)?)).ok(),
        _ => None,
    }
}

fn assign_convert(ty: Ty, v: Val) -> R<Val> {
    Ok(match (ty, v) {
        (Ty::Int, Val::Int(x)) => Val::Int(x),
        (Ty::Int, Val::Char(c)) => Val::Int(i32::from(c)),
        (Ty::Long, v) => match v.num().ok_or(UNSUPPORTED)? {
            Num::I(x) => Val::Long(i64::from(x)),
            Num::L(x) => Val::Long(x),
        },
        (Ty::Char, Val::Char(c)) => Val::Char(c),
        // Constant narrowing, as in `char c = 65;`.
        (Ty::Char, Val::Int(x)) if (0..=0xFFFF).contains(&x) => Val::Char(x as u16),
        (Ty::Bool, v @ Val::Bool(_)) | (Ty::Str, v @ Val::Str(_)) | (Ty::Arr, v @ Val::Arr(_)) => v,
        _ => return Err(UNSUPPORTED),
    })
}

fn cast(ty: Ty, v: Val) -> R<Val> {
    let n = v.num();
    Ok(match (ty, n) {
        (Ty::Int, Some(Num::I(x))) => Val::Int(x),
        (Ty::Int, Some(Num::L(x))) => Val::Int(x as i32),
        (Ty::Long, Some(Num::I(x))) => Val::Long(i64::from(x)),
        (Ty::Long, Some(Num::L(x))) => Val::Long(x),
        (Ty::Char, Some(Num::I(x))) => Val::Char(x as u16),
        (Ty::Char, Some(Num::L(x))) => Val::Char(x as u16),
        _ => return assign_convert(ty, v),
    })
}

fn jstring(v: &Val) -> R<Vec<u16>> {
    Ok(match v {
        Val::Int(x) => x.to_string().encode_utf16().collect(),
        Val::Long(x) => x.to_string().encode_utf16().collect(),
        Val::Bool(b) => b.to_string().encode_utf16().collect(),
        Val::Char(c) => vec![*c],
        Val::Str(s) => s.to_vec(),
        Val::Arr(_) => return Err(UNSUPPORTED),
    })
}

fn unary(op: &str, v: Val) -> R<Val> {
    if op == "!" {
        return match v {
            Val::Bool(b) => Ok(Val::Bool(!b)),
            _ => Err(UNSUPPORTED),
        };
    }
    let n = v.num().ok_or(UNSUPPORTED)?;
    Ok(match (op, n) {
        ("-", Num::I(x)) => Val::Int(x.wrapping_neg()),
        ("-", Num::L(x)) => Val::Long(x.wrapping_neg()),
        ("+", Num::I(x)) => Val::Int(x),
        ("+", Num::L(x)) => Val::Long(x),
        ("~", Num::I(x)) => Val::Int(!x),
        ("~", Num::L(x)) => Val::Long(!x),
        _ => return Err(UNSUPPORTED),
    })
}

fn binary(op: &str, l: Val, r: Val) -> R<Val> {
    if op == "+" && (matches!(l, Val::Str(_)) || matches!(r, Val::Str(_))) {
        let mut s = jstring(&l)?;
        s.extend(jstring(&r)?);
        return Ok(Val::Str(s.into()));
    }
    if let (Val::Bool(a), Val::Bool(b)) = (&l, &r) {
        let (a, b) = (*a, *b);
        return Ok(Val::Bool(match op {
            "&" => a & b,
            "|" => a | b,
            "^" => a ^ b,
            "==" => a == b,
            "!=" => a != b,
            _ => return Err(UNSUPPORTED),
        }));
    }
    let (a, b) = (l.num().ok_or(UNSUPPORTED)?, r.num().ok_or(UNSUPPORTED)?);
    if matches!(op, "<<" | ">>" | ">>>") {
        let count = match b {
            Num::I(x) => i64::from(x),
            Num::L(x) => x,
        };
        return Ok(match a {
            Num::I(x) => {
                let s = (count & 31) as u32;
                Val::Int(match op {
                    "<<" => x.wrapping_shl(s),
                    ">>" => x >> s,
                    _ => ((x as u32) >> s) as i32,
                })
            }
            Num::L(x) => {
                let s = (count & 63) as u32;
                Val::Long(match op {
                    "<<" => x.wrapping_shl(s),
                    ">>" => x >> s,
                    _ => ((x as u64) >> s) as i64,
                })
            }
        });
    }
    match (a, b) {
        (Num::I(x), Num::I(y)) => int_op(op, x, y),
        (x, y) => {
            let wide = |n| match n {
                Num::I(v) => i64::from(v),
                Num::L(v) => v,
            };
            long_op(op, wide(x), wide(y))
        }
    }
}

macro_rules! arith {
    ($name:ident, $t:ty, $wrap:path) => {
        fn $name(op: &str, x: $t, y: $t) -> R<Val> {
            Ok(match op {
                "+" => $wrap(x.wrapping_add(y)),
                "-" => $wrap(x.wrapping_sub(y)),
                "*" => $wrap(x.wrapping_mul(y)),
                "/" | "%" if y == 0 => return Err(Trap::DivByZero),
                "/" => $wrap(x.wrapping_div(y)),
                "%" => $wrap(x.wrapping_rem(y)),
                "&" => $wrap(x & y),
                "|" => $wrap(x | y),
                "^" => $wrap(x ^ y),
                "==" => Val::Bool(x == y),
                "!=" => Val::Bool(x != y),
                "<" => Val::Bool(x < y),
                "<=" => Val::Bool(x <= y),
                ">" => Val::Bool(x > y),
                ">=" => Val::Bool(x >= y),
                _ => return Err(UNSUPPORTED),
            })
        }
    };
}

arith!(int_op, i32, Val::Int);
arith!(long_op, i64, Val::Long);

fn static_call(class: &str, name: &str, args: &[Val]) -> R<Val> {
    let nums: Option<Vec<Num>> = args.iter().map(Val::num).collect();
    match (class, name, args) {
        ("String", "valueOf", [v]) => Ok(Val::Str(jstring(v)?.into())),
        ("Character", "isDigit", [Val::Char(c)]) => Ok(Val::Bool((u16::from(b'0')..=u16::from(b'9')).contains(c))),
        ("Math", "abs", [_]) => match nums.ok_or(UNSUPPORTED)?[0] {
            Num::I(x) => Ok(Val::Int(x.wrapping_abs())),
            Num::L(x) => Ok(Val::Long(x.wrapping_abs())),
        },
        ("Math", "max" | "min", [_, _]) | ("Integer", "compare", [_, _]) => {
            let ns = nums.ok_or(UNSUPPORTED)?;
            let pick = |x: i64, y: i64| match name {
                "max" => x.max(y),
                "min" => x.min(y),
                _ => (x > y) as i64 - (x < y) as i64,
            };
            match (ns[0], ns[1]) {
                (Num::I(x), Num::I(y)) => Ok(Val::Int(pick(i64::from(x), i64::from(y)) as i32)),
                (_, _) if class == "Integer" => Err(UNSUPPORTED),
                (x, y) => {
                    let w = |n| match n {
                        Num::I(v) => i64::from(v),
                        Num::L(v) => v,
                    };
                    Ok(Val::Long(pick(w(x), w(y))))
                }
            }
        }
        _ => Err(UNSUPPORTED),
    }
}

fn fold_case(c: u16) -> u16 {
    match char::from_u32(u32::from(c)) {
        Some(ch) if ch.is_ascii() => u16::from(ch.to_ascii_lowercase() as u8),
        _ => c,
    }
}

fn find(hay: &[u16], needle: &[u16]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    hay.windows(needle.len()).position(|w| w == needle)
}

fn string_method(s: &[u16], name: &str, args: &[Val]) -> R<Val> {
    Ok(match (name, args) {
        ("length", []) => Val::Int(s.len() as i32),
        ("isEmpty", []) => Val::Bool(s.is_empty()),
        ("charAt", [i]) => {
            let Some(Num::I(i)) = i.num() else {
                return Err(UNSUPPORTED);
            };
            let c = usize::try_from(i).ok().and_then(|i| s.get(i)).ok_or(Trap::IndexOutOfBounds)?;
            Val::Char(*c)
        }
        ("equals", [Val::Str(o)]) => Val::Bool(s == &o[..]),
        ("equals", [Val::Arr(_)]) => return Err(UNSUPPORTED),
        // A boxed number, boolean or character never equals a String.
        ("equals", [_]) => Val::Bool(false),
        ("equalsIgnoreCase", [Val::Str(o)]) => {
            Val::Bool(s.len() == o.len() && s.iter().zip(o.iter()).all(|(&a, &b)| fold_case(a) == fold_case(b)))
        }
        ("startsWith", [Val::Str(o)]) => Val::Bool(s.starts_with(o)),
        ("endsWith", [Val::Str(o)]) => Val::Bool(s.ends_with(o)),
        ("contains", [Val::Str(o)]) => Val::Bool(find(s, o).is_some()),
        ("indexOf", [Val::Str(o)]) => Val::Int(find(s, o).map_or(-1, |i| i as i32)),
        ("indexOf", [Val::Char(c)]) => Val::Int(s.iter().position(|x| x == c).map_or(-1, |i| i as i32)),
        ("compareTo", [Val::Str(o)]) => {
            let diff = s.iter().zip(o.iter()).find(|(a, b)| a != b);
            Val::Int(match diff {
                Some((&a, &b)) => i32::from(a) - i32::from(b),
                None => s.len() as i32 - o.len() as i32,
            })
        }
        _ => return Err(UNSUPPORTED),
    })
}

fn literal(t: &SyntaxTree, n: NodeId) -> R<Val> {
    let tok = t.first_token(n).ok_or(UNSUPPORTED)?;
    let text = t.token_text(tok);
    match t.token_kind(tok) {
        TokenKind::IntLiteral => int_literal(text),
        TokenKind::CharLiteral => {
            let units = unescape(text.strip_prefix('\'').and_then(|s| s.strip_suffix('\'')).ok_or(UNSUPPORTED)?)?;
            match units[..] {
                [c] => Ok(Val::Char(c)),
                _ => Err(UNSUPPORTED),
            }
        }
        TokenKind::StringLiteral => {
            let inner = text.strip_prefix('"').and_then(|s| s.strip_suffix('"')).ok_or(UNSUPPORTED)?;
            Ok(Val::Str(unescape(inner)?.into()))
        }
        _ => match text {
            "true" => Ok(Val::Bool(true)),
            "false" => Ok(Val::Bool(false)),
            _ => Err(UNSUPPORTED),
        },
    }
}

fn int_literal(text: &str) -> R<Val> {
    let clean: String = text.chars().filter(|&c| c != '_').collect();
    let (digits, long) = match clean.strip_suffix(['l', 'L']) {
        Some(d) => (d, true),
        None => (clean.as_str(), false),
    };
    let lower = digits.to_ascii_lowercase();
    let (radix, body, decimal) = if let Some(h) = lower.strip_prefix("0x") {
        (16, h, false)
    } else if let Some(b) = lower.strip_prefix("0b") {
        (2, b, false)
    } else if lower.len() > 1 && lower.starts_with('0') {
        (8, &lower[1..], false)
    } else {
        (10, lower.as_str(), true)
    };
    let v = u64::from_str_radix(body, radix).map_err(|_| UNSUPPORTED)?;
    // Decimal literals stop at MAX + 1 (only legal under unary minus, where
    // wrapping gives the right answer); other radixes fill the bit width.
    match (long, decimal) {
        (false, true) if v <= 1 << 31 => Ok(Val::Int(v as u32 as i32)),
        (false, false) if v <= u64::from(u32::MAX) => Ok(Val::Int(v as u32 as i32)),
        (true, true) if v <= 1 << 63 => Ok(Val::Long(v as i64)),
        (true, false) => Ok(Val::Long(v as i64)),
        _ => Err(UNSUPPORTED),
    }
}

fn unescape(s: &str) -> R<Vec<u16>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '\\' {
            let mut buf = [0u16; 2];
            out.extend_from_slice(c.encode_utf16(&mut buf));
            continue;
        }
        let e = chars.next().ok_or(UNSUPPORTED)?;
        let unit = match e {
            'n' => 0x0A,
            't' => 0x09,
            'b' => 0x08,
            'r' => 0x0D,
            'f' => 0x0C,
            's' => 0x20,
            '\'' | '"' | '\\' => e as u16,
            'u' => {
                while chars.peek() == Some(&'u') {
                    chars.next();
                }
                let hex: String = (0..4).filter_map(|_| chars.next()).collect();
                u16::from_str_radix(&hex, 16).map_err(|_| UNSUPPORTED)?
            }
            '0'..='7' => {
                let mut v = e.to_digit(8).expect("octal digit");
                let max_len = if e <= '3' { 3 } else { 2 };
                for _ in 1..max_len {
                    match chars.peek().and_then(|d| d.to_digit(8)) {
                        Some(d) => {
                            v = v * 8 + d;
                            chars.next();
                        }
                        None => break,
                    }
                }
                v as u16
            }
            _ => return Err(UNSUPPORTED),
        };
        out.push(unit);
    }
    Ok(out)
}
