#include "defq/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace defq {

int Report::passed() const
{
	int n = 0;
	for (auto &c : checks)
		n += c.pass ? 1 : 0;
	return n;
}

int Report::failed() const { return (int)checks.size() - passed(); }

void Report::sort_by_name()
{
	std::stable_sort(checks.begin(), checks.end(),
	                 [](const CheckRecord &a, const CheckRecord &b) { return a.name < b.name; });
}

std::string emit_text(const Report &r, bool timings)
{
	std::ostringstream os;
	os << "== " << r.command << " (seed " << r.seed << ") ==\n";
	for (const auto &c : r.checks)
	{
		os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
		if (timings)
			os << "  (" << c.ms << " ms)";
		os << "\n";
		if (!c.pass && !c.witness.empty())
			os << "       witness: " << c.witness << "\n";
		if (!c.note.empty())
			os << "       " << c.note << "\n";
	}
	os << "summary: " << r.passed() << "/" << r.checks.size() << " checks passed\n";
	return os.str();
}

std::string emit_machine(const Report &r)
{
	nlohmann::ordered_json j;
	j["schema_version"] = 1;
	j["command"] = r.command;
	j["seed"] = r.seed;
	nlohmann::ordered_json arr = nlohmann::ordered_json::array();
	for (const auto &c : r.checks)
	{
		nlohmann::ordered_json e;
		e["name"] = c.name;
		e["status"] = c.pass ? "pass" : "fail";
		if (!c.witness.empty())
			e["witness"] = c.witness;
		if (!c.note.empty())
			e["note"] = c.note;
		arr.push_back(e);
	}
	j["checks"] = arr;
	j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}};
	return j.dump(2) + "\n";
}

} // namespace defq
