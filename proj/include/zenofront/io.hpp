#ifndef ZENOFRONT_IO_HPP
#define ZENOFRONT_IO_HPP

#include <string>
#include <vector>

#include "zenofront/model.hpp"
#include "zenofront/solver.hpp"
#include "zenofront/transform.hpp"

namespace zenofront {

// Native instance file: {"n","t","p","d","dbar","c","central"?,"overrides"?}.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
void write_instance(const Instance& inst, const std::string& path);
Instance read_instance(const std::string& path);

// General instance file: {"vertices","edges","I","G","t","p"}.
std::string general_to_json(const GeneralInstance& g);
GeneralInstance general_from_json(const std::string& text);
void write_general(const GeneralInstance& g, const std::string& path);
GeneralInstance read_general(const std::string& path);

// Front emission. CSV is "cost,makespan" ascending in cost; JSON adds the
// PPP rendering and witness plans in arrow notation.
std::string front_to_csv(const std::vector<FrontPoint>& front);
std::string front_to_json(const std::vector<FrontPoint>& front,
                          const std::vector<std::string>& names = {});
std::string stats_to_json(const Stats& stats);

// Reduction sidecar so plans can be expanded back onto the original graph.
std::string mapping_to_json(const ReduceResult& red);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

struct PddlPair {
    std::string domain;
    std::string problem;
};

// ZenoTravel-style durative domain plus the instance as a PDDL problem.
// Refuses transformed instances: virtual cities have no physical flights.
PddlPair export_pddl(const Instance& inst, const std::string& name = "zeno");

}  // namespace zenofront

#endif
