// Demo page for the teachrep WebAssembly build. Every export returns a
// JSON string (or throws a string), so this file only parses and renders.
import init, * as wasm from "./pkg/teachrep_web.js";

const $ = (id) => document.getElementById(id);

function call(fn, ...args) {
  try {
    return { ok: JSON.parse(fn(...args)) };
  } catch (e) {
    return { err: String(e) };
  }
}

function showError(el, err) {
  el.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = err;
  el.appendChild(p);
}

function escapeHtml(s) {
  return s.replace(/[&<>"]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;" })[c]);
}

function table(headers, rows) {
  const head = headers.map((h) => `<th>${escapeHtml(h)}</th>`).join("");
  const body = rows
    .map((r) => "<tr>" + r.map((c) => `<td>${escapeHtml(String(c ?? "—"))}</td>`).join("") + "</tr>")
    .join("");
  return `<table><thead><tr>${head}</tr></thead><tbody>${body}</tbody></table>`;
}

const pct = (x) => (100 * x).toFixed(2) + "%";

// ------------------------------------------------------------------ P3

let trace = null;

function renderState(i) {
  const s = trace.trace[i];
  const code = trace.program;
  const prog = [...code]
    .map((c, j) => (j === s.pc ? `<span class="pc">${escapeHtml(c)}</span>` : escapeHtml(c)))
    .join("");
  const halt = s.pc >= code.length ? ' <span class="pc">␣</span>' : "";
  // Pad the visible tape so the head is always on a cell.
  const from = Math.min(s.tapeStart, s.head);
  const to = Math.max(s.tapeStart + s.tape.length - 1, s.head);
  let tape = "";
  for (let pos = from; pos <= to; pos++) {
    const k = pos - s.tapeStart;
    const sym = k >= 0 && k < s.tape.length ? s.tape[k] : "B";
    tape += pos === s.head ? `<span class="head">${sym}</span>` : sym;
  }
  $("p3-state").innerHTML =
    `program  ${prog}${halt}\n` +
    `tape     ${tape}\n` +
    `output   ${escapeHtml(s.output) || "ε"}`;
  $("p3-step-label").textContent = `step ${s.step} of ${trace.steps}` + (s.instruction ? ` — next: ${s.instruction}` : " — halted");
}

$("p3-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const limit = Math.max(1, Number($("p3-limit").value) || 400);
  const r = call(wasm.p3_run, $("p3-program").value, $("p3-input").value, limit, 2000);
  if (r.err) {
    showError($("p3-result"), r.err);
    $("p3-trace-controls").hidden = true;
    $("p3-state").textContent = "";
    return;
  }
  trace = r.ok;
  const verdict = trace.halted
    ? `halted after ${trace.steps} steps with output <b>${escapeHtml(trace.output) || "ε"}</b>`
    : `did not halt within ${trace.stepLimit} steps (no output)`;
  $("p3-result").innerHTML =
    `<p><code>${escapeHtml(trace.program)}</code> on <code>${escapeHtml(trace.input) || "ε"}</code> ${verdict}.` +
    (trace.traceTruncated ? ` Trace shows the first ${trace.trace.length} states.` : "") +
    "</p>";
  const slider = $("p3-step");
  slider.max = String(trace.trace.length - 1);
  slider.value = "0";
  $("p3-trace-controls").hidden = false;
  renderState(0);
});

$("p3-step").addEventListener("input", (ev) => renderState(Number(ev.target.value)));

// ------------------------------------------------------------------ graphs

function syncGraphParams() {
  const kind = $("graph-fixture").value;
  $("graph-params-separation").hidden = kind !== "separation";
  $("graph-params-random").hidden = kind !== "random";
  $("graph-ocg").hidden = kind !== "ocg";
}
$("graph-fixture").addEventListener("change", syncGraphParams);

const MARKS = { eager: ["e", "E"], greedy: ["g", "G"], optimal1: ["o1", "1"], optimal2: ["o2", "2"] };

function renderGraph(g) {
  const rows = g.protocols ?? g.summary.protocols;
  $("graph-result").innerHTML =
    `<p>${g.reps.length} representations in ${new Set(g.classes).size} twin classes, ` +
    `${g.wits.length} witnesses. Redundancy ${g.redundancy.toFixed(4)}, ` +
    `redundancy spread ${g.redundancySpread.toFixed(4)}.` +
    (g.optimal1Error ? ` Optimal-1: ${escapeHtml(g.optimal1Error)}.` : "") +
    "</p>" +
    table(
      ["protocol", "reps taught", "concepts taught", "max witness size", "max witness index"],
      rows.map((p) => [p.algorithm, p.repsTaught + (p.repsLowerBound ? " (≥)" : ""), p.conceptsTaught, p.maxWitnessSize, p.maxWitnessIndex]),
    );

  // Per-cell protocol marks.
  const marks = new Map();
  for (const m of g.maps) {
    for (const [r, w] of m.pairs) {
      const key = `${w},${r}`;
      if (!marks.has(key)) marks.set(key, []);
      marks.get(key).push(MARKS[m.protocol]);
    }
  }
  if (g.reps.length > 60 || g.wits.length > 200) {
    $("graph-legend").hidden = true;
    $("graph-matrix").innerHTML = "<p class=\"hint\">Graph too large to draw as a matrix.</p>";
    return;
  }
  let html = "<table><thead><tr><th></th>";
  g.reps.forEach((r, i) => {
    html += `<th title="size ${r.size}, class ${g.classes[i]}">${escapeHtml(r.label || "r" + i)}<br><small>${r.size}</small></th>`;
  });
  html += "</tr></thead><tbody>";
  g.wits.forEach((w, wi) => {
    html += `<tr><th>${wi + 1}. ${escapeHtml(w.label || "w" + wi)} <small>(${w.size})</small></th>`;
    const adj = new Set(g.adjacency[wi]);
    g.reps.forEach((_, ri) => {
      const ms = marks.get(`${wi},${ri}`);
      if (ms) html += "<td>" + ms.map(([cls, t]) => `<span class="${cls}">${t}</span>`).join("") + "</td>";
      else html += adj.has(ri) ? '<td class="dot"></td>' : "<td></td>";
    });
    html += "</tr>";
  });
  html += "</tbody></table>";
  $("graph-legend").hidden = false;
  $("graph-matrix").innerHTML = html;
}

$("graph-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const kind = $("graph-fixture").value;
  let r;
  if (kind === "ocg") {
    r = call(wasm.teach_ocg, $("graph-ocg").value);
  } else if (kind === "separation") {
    r = call(wasm.teach_fixture, `separation:${$("sep-s").value}:${$("sep-t").value}:${$("sep-k").value}`, 0);
  } else if (kind === "random") {
    const name = `random:${$("rnd-r").value}:${$("rnd-w").value}:${$("rnd-p").value}`;
    r = call(wasm.teach_fixture, name, Number($("rnd-seed").value) >>> 0);
  } else {
    r = call(wasm.teach_fixture, "figure1", 0);
  }
  if (r.err) {
    showError($("graph-result"), r.err);
    $("graph-matrix").innerHTML = "";
    $("graph-legend").hidden = true;
  } else {
    renderGraph(r.ok);
  }
});

// ------------------------------------------------------------------ DNF

$("dnf-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const r = call(wasm.dnf_formula, $("dnf-formula").value);
  if (r.err) return showError($("dnf-result"), r.err);
  const f = r.ok;
  $("dnf-result").innerHTML =
    `<p><code>${escapeHtml(f.formula)}</code>: size ${f.size}, truth table f(000)…f(111) = <code>${f.truthTable}</code>, ` +
    `consistent with ${f.consistentWitnesses} witnesses of at most five examples. ` +
    (f.threeTermIndex ? `Representation #${f.threeTermIndex} in the 3-term DNF order.` : "Not a 3-term DNF representation.") +
    "</p>" +
    table(
      ["protocol (3-term DNF, ≤5 examples)", "taught representation", "witness", "size", "index"],
      f.taught.map((t) => [t.protocol, t.rep, t.witness, t.witnessSize, t.witnessIndex]),
    );
});

$("domain-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  $("domain-result").innerHTML = '<p class="hint">Computing…</p>';
  // Let the page paint before the synchronous computation starts.
  setTimeout(() => {
    const r = call(wasm.dnf_summary, $("domain-variant").value, $("domain-spec").value, $("domain-tie").value);
    if (r.err) return showError($("domain-result"), r.err);
    const s = r.ok;
    const c = s.comparison;
    $("domain-result").innerHTML =
      `<p>${s.domain} / ${s.witnessSpec}: ${s.numReps} representations, ${s.numConcepts} concepts, ` +
      `${s.numWitnesses} witnesses, ${s.numEdges} edges. Redundancy ${s.redundancy.toFixed(4)}, ` +
      `spread ${s.redundancySpread.toFixed(4)}. Greedy beats Eager on ${pct(c.pctIndexLower)} of ` +
      `${c.commonConcepts} concepts by index and ${pct(c.pctSizeSmaller)} by size.</p>` +
      table(
        ["protocol", "reps taught", "concepts taught", "max witness size", "max witness index"],
        s.protocols.map((p) => [p.algorithm, p.repsTaught + (p.repsLowerBound ? " (≥)" : ""), p.conceptsTaught, p.maxWitnessSize, p.maxWitnessIndex]),
      );
  }, 20);
});

// ------------------------------------------------------------------ conjecture

$("conj-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const r = call(wasm.conjecture, Number($("conj-k").value), Number($("conj-n").value), Number($("conj-q").value));
  if (r.err) return showError($("conj-result"), r.err);
  const v = r.ok;
  const rows = v.minimizers.slice(0, 20).map((m) => m.map((x) => x.toString(2).padStart(v.n, "0")).join(" "));
  $("conj-result").innerHTML =
    `<p>Best value ${v.bestValue}; binary count gives ${v.binaryCountValue} — ` +
    `<b>${v.binaryCountIsOptimal ? "optimal" : "NOT optimal (counterexample!)"}</b>. ` +
    `${v.subsetsExamined} row sets examined, ${v.minimizers.length} minimisers.</p>` +
    table(["minimising row sets" + (v.minimizers.length > 20 ? " (first 20)" : "")], rows.map((x) => [x]));
});

// ------------------------------------------------------------------ start

init()
  .then(() => {
    $("status").textContent = "Ready.";
    syncGraphParams();
    $("p3-form").requestSubmit();
    $("graph-form").requestSubmit();
    $("dnf-form").requestSubmit();
    $("conj-form").requestSubmit();
  })
  .catch((e) => {
    $("status").textContent = `Could not load the WebAssembly module (${e}). Build it with the steps in the README.`;
  });
