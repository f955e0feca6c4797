import init, { solve_linear, word_equation, edt0l_enumerate } from "./pkg/eqset_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";

function svgEl(name, attrs) {
  const el = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  return el;
}

function showError(target, out) {
  target.textContent = out.error;
  target.className = "error";
}

// Solutions of a two-variable system as a point grid.
function plot(solutions, bound) {
  const svg = $("lin-plot");
  svg.replaceChildren();
  const size = 360, pad = 24, step = (size - 2 * pad) / Math.max(bound, 1);
  const at = (x, y) => [pad + x * step, size - pad - y * step];
  for (let k = 0; k <= bound; k++) {
    const [x0, y0] = at(k, 0), [x1, y1] = at(0, k);
    svg.append(svgEl("line", { x1: x0, y1: pad, x2: x0, y2: size - pad, stroke: "#eee" }));
    svg.append(svgEl("line", { x1: pad, y1: y1, x2: size - pad, y2: y1, stroke: "#eee" }));
  }
  for (const [x, y] of solutions) {
    const [cx, cy] = at(Number(x), Number(y));
    svg.append(svgEl("circle", { cx, cy, r: Math.max(2, step / 4), fill: "#1565c0" }));
  }
}

function updateLinear() {
  const bound = Number($("lin-bound").value);
  $("lin-bound-value").textContent = bound;
  const out = JSON.parse(solve_linear($("lin-input").value, bound));
  const summary = $("lin-summary");
  if (out.error) {
    showError(summary, out);
    $("lin-list").textContent = "";
    $("lin-plot").replaceChildren();
    return;
  }
  summary.className = "";
  summary.textContent =
    `${out.solvable ? "solvable" : "no solution"}, ${out.infinite ? "infinite" : "finite"}; ` +
    `${out.states} states, ${out.arcs} arcs` +
    (out.witness ? `; least-norm witness (${out.witness.join(", ")})` : "");
  $("lin-list").textContent = out.solutions.map((x) => `(${x.join(", ")})`).join("\n");
  $("lin-plot").style.display = out.dim === 2 ? "" : "none";
  if (out.dim === 2) plot(out.solutions, out.bound);
}

function updateWordEquation() {
  const cap = Number($("weq-cap").value);
  $("weq-cap-value").textContent = cap;
  const out = JSON.parse(word_equation($("weq-input").value, cap));
  const list = $("weq-solutions");
  if (out.error) {
    showError(list, out);
    $("weq-system").textContent = "";
    return;
  }
  list.className = "";
  list.textContent = out.solutions.length ? out.solutions.join("\n") : "no solutions up to this length";
  $("weq-system").textContent = out.system ?? out.system_error;
}

function updateEdt0l() {
  const cap = Number($("edt-cap").value);
  $("edt-cap-value").textContent = cap;
  const out = JSON.parse(edt0l_enumerate($("edt-input").value, cap));
  const summary = $("edt-summary");
  if (out.error) {
    showError(summary, out);
    $("edt-words").textContent = "";
    return;
  }
  summary.className = "";
  summary.textContent =
    `${out.empty ? "empty" : out.infinite ? "infinite" : "finite"} language; ` +
    `${out.words.length} words up to length ${cap}` + (out.truncated ? " (depth cap reached)" : "");
  $("edt-words").textContent = out.words.map((w) => w || "ε").join("\n");
}

await init();
for (const [ids, update] of [
  [["lin-input", "lin-bound"], updateLinear],
  [["weq-input", "weq-cap"], updateWordEquation],
  [["edt-input", "edt-cap"], updateEdt0l],
]) {
  for (const id of ids) $(id).addEventListener("input", update);
  update();
}
