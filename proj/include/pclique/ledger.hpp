#pragma once

// Working-space accounting. Algorithms declare every mutable register they
// hold inside a frame; current/peak are exact bit sums over the open frames.
// Read-only inputs (the adjacency) and write-only outputs (emitted vertices)
// are never charged, and the ledger's own bookkeeping is not part of the
// measured quantity.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace pclique {

struct Register {
  std::string_view name;
  std::uint32_t bits;
};

class WorkspaceLedger {
 public:
  using FrameId = std::uint64_t;

  WorkspaceLedger() { frames_.reserve(64); }

  FrameId open_frame(std::initializer_list<Register> regs) {
    std::uint64_t w = 0;
    for (const auto& r : regs) w += r.bits;
    return push(w);
  }

  FrameId open_frame(std::span<const Register> regs) {
    std::uint64_t w = 0;
    for (const auto& r : regs) w += r.bits;
    return push(w);
  }

  FrameId open_frame_bits(std::uint64_t bits) { return push(bits); }

  void close_frame(FrameId id) {
    if (frames_.empty() || frames_.back().id != id)
      throw ledger_misuse_error("close of a frame that is not on top");
    current_ -= frames_.back().bits;
    frames_.pop_back();
  }

  std::uint64_t current_bits() const { return current_; }
  std::uint64_t peak_bits() const { return peak_; }
  std::size_t open_frames() const { return frames_.size(); }

 private:
  struct Frame {
    FrameId id;
    std::uint64_t bits;
  };

  FrameId push(std::uint64_t bits) {
    const FrameId id = next_id_++;
    frames_.push_back({id, bits});
    current_ += bits;
    if (current_ > peak_) peak_ = current_;
    return id;
  }

  std::vector<Frame> frames_;
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
  FrameId next_id_ = 1;
};

// RAII helper for the well-nested scopes inside the algorithms.
class ScopedFrame {
 public:
  ScopedFrame(WorkspaceLedger& ledger, std::initializer_list<Register> regs)
      : ledger_(ledger), id_(ledger.open_frame(regs)) {}
  ScopedFrame(WorkspaceLedger& ledger, std::span<const Register> regs)
      : ledger_(ledger), id_(ledger.open_frame(regs)) {}
  ScopedFrame(WorkspaceLedger& ledger, std::uint64_t bits)
      : ledger_(ledger), id_(ledger.open_frame_bits(bits)) {}
  ScopedFrame(const ScopedFrame&) = delete;
  ScopedFrame& operator=(const ScopedFrame&) = delete;
  ~ScopedFrame() { ledger_.close_frame(id_); }

 private:
  WorkspaceLedger& ledger_;
  WorkspaceLedger::FrameId id_;
};

}  // namespace pclique
