#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace defq {

// One verification record. `witness` holds a re-parseable expression in
// the shared grammar whenever the check can point at a concrete
// counterexample; `note` is free-form human detail.
struct CheckRecord
{
	std::string name;
	bool pass = true;
	std::string witness;
	std::string note;
	double ms = 0; // wall time; text output only, never serialized
};

struct Report
{
	std::string command;
	uint64_t seed = 0;
	std::vector<CheckRecord> checks;

	void add(const std::string &name, bool pass, const std::string &witness = "",
	         const std::string &note = "")
	{
		checks.push_back({name, pass, witness, note, 0});
	}

	int passed() const;
	int failed() const;
	bool all_pass() const { return failed() == 0; }

	// Output ordering is fixed by check name, independent of execution
	// order.
	void sort_by_name();
};

std::string emit_text(const Report &r, bool timings = false);

// Machine-readable form: versioned JSON, byte-stable for a fixed document
// and seed (no timings).
std::string emit_machine(const Report &r);

} // namespace defq
