// Copyright 2026 The olsconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "olsconv/engine.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "olsconv/errors.h"
#include "olsconv/gof.h"
#include "olsconv/random.h"
#include "olsconv/results_csv.h"

namespace olsconv {

namespace {

// Integer tallies of one or more outer repeats; summing them is order
// independent, which keeps results identical for any thread count.
struct Tally {
  std::uint64_t ad = 0;
  std::uint64_t cvm = 0;
  std::uint64_t ks = 0;
  std::uint64_t type1_x = 0;
  std::uint64_t type1_z = 0;
  std::uint64_t redraws = 0;
  std::uint64_t clamps = 0;

  Tally& operator+=(const Tally& o) {
    ad += o.ad;
    cvm += o.cvm;
    ks += o.ks;
    type1_x += o.type1_x;
    type1_z += o.type1_z;
    redraws += o.redraws;
    clamps += o.clamps;
    return *this;
  }
};

std::string Describe(const CellSpec& c) {
  std::ostringstream s;
  s << "cell " << FormatCellId(c.cell_id) << " (y=" << c.y_dist.label
    << ", x=" << c.x_dist.label;
  if (c.z_dist) s << ", z=" << c.z_dist->label;
  s << ", n=" << c.n << ", R=" << c.R << ", B=" << c.B << ")";
  return s.str();
}

class BatchRunner {
 public:
  BatchRunner(const CellSpec& cell, double alpha)
      : cell_(cell),
        alpha_(alpha),
        y_mean_(TheoreticalMoments(cell.y_dist).mean),
        y_(cell.n),
        x_(cell.n),
        z_(cell.z_dist ? cell.n : 0),
        t_(cell.R) {}

  Tally Run(std::uint64_t master, std::size_t repeat) {
    RandomStream stream(DeriveSeed(master, cell_.cell_id, repeat));
    Tally tally;
    const std::uint64_t redraw_cap = 100 * static_cast<std::uint64_t>(cell_.R);
    for (std::size_t r = 0; r < cell_.R; ++r) {
      for (;;) {
        FillDraws(cell_.y_dist, y_, stream);
        for (double& v : y_) v -= y_mean_;
        FillDraws(cell_.x_dist, x_, stream);
        if (cell_.z_dist) FillDraws(*cell_.z_dist, z_, stream);
        try {
          const FitResult fit = cell_.z_dist ? FitTwo(y_, x_, z_, alpha_)
                                             : FitSimple(y_, x_, alpha_);
          t_[r] = fit.t_x;
          tally.type1_x += fit.reject_x;
          if (fit.reject_z) tally.type1_z += *fit.reject_z;
          break;
        } catch (const DegenerateFit& e) {
          if (++tally.redraws > redraw_cap) {
            throw CellError(Describe(cell_) + ": more than " +
                            std::to_string(redraw_cap) +
                            " degenerate redraws in repeat " +
                            std::to_string(repeat) + " (last: " + e.what() +
                            ")");
          }
        }
      }
    }
    const GofReport g = TestAgainstT(t_, cell_.Df());
    tally.ad += g.p_ad <= alpha_;
    tally.cvm += g.p_cvm <= alpha_;
    tally.ks += g.p_ks <= alpha_;
    tally.clamps += g.clamped;
    return tally;
  }

 private:
  const CellSpec& cell_;
  double alpha_;
  double y_mean_;
  std::vector<double> y_, x_, z_, t_;
};

}  // namespace

CellResult RunCell(const CellSpec& cell, std::uint64_t master,
                   const CellOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw ContractViolation("alpha must lie in (0, 1)");
  }
  const unsigned workers = std::clamp<unsigned>(
      options.workers, 1, static_cast<unsigned>(std::max<std::size_t>(1, cell.B)));

  Tally total;
  if (workers == 1) {
    BatchRunner runner(cell, options.alpha);
    for (std::size_t b = 0; b < cell.B; ++b) total += runner.Run(master, b);
  } else {
    std::vector<Tally> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            BatchRunner runner(cell, options.alpha);
            for (std::size_t b = next++; b < cell.B; b = next++) {
              partial[w] += runner.Run(master, b);
            }
          } catch (...) {
            errors[w] = std::current_exception();
            next = cell.B;
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const Tally& t : partial) total += t;
  }

  CellResult r;
  r.cell_id = cell.cell_id;
  r.y_dist = cell.y_dist.label;
  r.x_dist = cell.x_dist.label;
  r.z_dist = cell.z_dist ? cell.z_dist->label : "";
  r.n = cell.n;
  r.R = cell.R;
  r.B = cell.B;
  const double b = static_cast<double>(cell.B);
  const double br = b * static_cast<double>(cell.R);
  r.ad_reject_rate = static_cast<double>(total.ad) / b;
  r.cvm_reject_rate = static_cast<double>(total.cvm) / b;
  r.ks_reject_rate = static_cast<double>(total.ks) / b;
  r.type1_rate_x = static_cast<double>(total.type1_x) / br;
  if (cell.z_dist) r.type1_rate_z = static_cast<double>(total.type1_z) / br;
  r.redraw_count = total.redraws;
  r.clamp_count = total.clamps;
  r.master_seed = master;
  r.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return r;
}

namespace {

// Loads the checkpoint, keeping rows that parse, match the master seed and
// are not duplicates. Rewrites the file when anything was dropped.
std::set<std::uint64_t> LoadCheckpoint(
    const std::filesystem::path& path, std::uint64_t master,
    const std::function<void(const std::string&)>& warn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  in.close();

  std::set<std::uint64_t> done;
  std::vector<std::string> kept;
  bool dropped = false;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    const bool terminated = eol != std::string::npos;
    if (!terminated) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kResultsHeader) {
        throw std::runtime_error(path.string() +
                                 " is not a results file (header mismatch)");
      }
      continue;
    }
    if (line.empty()) continue;
    std::string why;
    const auto row = ParseRow(line);
    if (!terminated) {
      why = "truncated row";
    } else if (!row) {
      why = "malformed row";
    } else if (row->master_seed != master) {
      why = "row from master seed " + std::to_string(row->master_seed);
    } else if (done.count(row->cell_id) != 0) {
      why = "duplicate row";
    }
    if (!why.empty()) {
      warn(path.string() + ":" + std::to_string(line_no) + ": " + why +
           " discarded; the cell will be re-run");
      dropped = true;
      continue;
    }
    done.insert(row->cell_id);
    kept.push_back(std::move(line));
  }

  if (dropped || text.empty()) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
      out << kResultsHeader << '\n';
      for (const auto& l : kept) out << l << '\n';
    }
    std::filesystem::rename(tmp, path);
  }
  return done;
}

}  // namespace

GridSummary RunGrid(const std::vector<CellSpec>& cells, std::uint64_t master,
                    const std::filesystem::path& results_path,
                    const GridOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto warn = options.warn ? options.warn : [](const std::string& m) {
    std::cerr << "warning: " << m << '\n';
  };

  GridSummary summary;
  summary.cells_total = cells.size();

  std::set<std::uint64_t> done;
  if (options.resume && std::filesystem::exists(results_path)) {
    done = LoadCheckpoint(results_path, master, warn);
  } else {
    std::ofstream out(results_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + results_path.string());
    out << kResultsHeader << '\n';
  }

  std::vector<const CellSpec*> pending;
  std::set<std::uint64_t> queued;
  for (const auto& c : cells) {
    if (done.count(c.cell_id) != 0) {
      ++summary.cells_skipped;
    } else if (queued.insert(c.cell_id).second) {
      pending.push_back(&c);
    }
  }

  std::ofstream sink(results_path, std::ios::binary | std::ios::app);
  if (!sink) throw std::runtime_error("cannot append to " + results_path.string());

  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::max(1u, std::min<unsigned>(
                             workers, static_cast<unsigned>(pending.size())));

  std::mutex sink_mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      if (stop) return;
      const std::size_t i = next++;
      if (i >= pending.size()) return;
      try {
        const CellResult r =
            RunCell(*pending[i], master, CellOptions{options.alpha, 1});
        std::lock_guard lock(sink_mu);
        sink << FormatRow(r) << '\n';
        sink.flush();
        if (!sink) throw std::runtime_error("write failed: " + results_path.string());
        ++summary.cells_run;
        summary.redraw_total += r.redraw_count;
        summary.clamp_total += r.clamp_count;
        if (options.on_cell) options.on_cell(r);
      } catch (...) {
        std::lock_guard lock(sink_mu);
        if (!first_error) first_error = std::current_exception();
        stop = true;
        return;
      }
    }
  };
  if (!pending.empty()) {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);

  summary.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return summary;
}

}  // namespace olsconv
