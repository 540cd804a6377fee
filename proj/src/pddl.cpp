#include <sstream>

#include "zenofront/io.hpp"

namespace zenofront {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

PddlPair export_pddl(const Instance& inst, const std::string& name) {
    if (!inst.overrides.empty())
        throw ZenoError("export original instance before transformation");

    std::ostringstream d;
    d << ";; One-passenger-capacity transport domain with two tracked metrics:\n"
         ";; plan duration (makespan) and accumulated landing cost. PDDL has no\n"
         ";; native multi-objective metric, so :metric picks the makespan; the\n"
         ";; (total-cost) fluent carries the second objective for external use.\n"
         "(define (domain " << name << ")\n"
         "  (:requirements :typing :durative-actions :numeric-fluents)\n"
         "  (:types plane person city)\n"
         "  (:predicates\n"
         "    (at-plane ?a - plane ?c - city)\n"
         "    (at-person ?x - person ?c - city)\n"
         "    (aboard ?x - person ?a - plane)\n"
         "    (empty ?a - plane)\n"
         "    (connected ?c1 - city ?c2 - city))\n"
         "  (:functions\n"
         "    (flight-duration ?c1 - city ?c2 - city)\n"
         "    (landing-cost ?c - city)\n"
         "    (boarding-time)\n"
         "    (total-cost))\n"
         "  (:durative-action board\n"
         "    :parameters (?x - person ?a - plane ?c - city)\n"
         "    :duration (= ?duration (boarding-time))\n"
         "    :condition (and (at start (at-person ?x ?c))\n"
         "                    (at start (empty ?a))\n"
         "                    (over all (at-plane ?a ?c)))\n"
         "    :effect (and (at start (not (at-person ?x ?c)))\n"
         "                 (at start (not (empty ?a)))\n"
         "                 (at end (aboard ?x ?a))))\n"
         "  (:durative-action debark\n"
         "    :parameters (?x - person ?a - plane ?c - city)\n"
         "    :duration (= ?duration (boarding-time))\n"
         "    :condition (and (at start (aboard ?x ?a))\n"
         "                    (over all (at-plane ?a ?c)))\n"
         "    :effect (and (at start (not (aboard ?x ?a)))\n"
         "                 (at end (at-person ?x ?c))\n"
         "                 (at end (empty ?a))))\n"
         "  (:durative-action fly\n"
         "    :parameters (?a - plane ?c1 - city ?c2 - city)\n"
         "    :duration (= ?duration (flight-duration ?c1 ?c2))\n"
         "    :condition (and (at start (at-plane ?a ?c1))\n"
         "                    (over all (connected ?c1 ?c2)))\n"
         "    :effect (and (at start (not (at-plane ?a ?c1)))\n"
         "                 (at end (at-plane ?a ?c2))\n"
         "                 (at end (increase (total-cost) (landing-cost ?c2)))))\n"
         ")\n";

    std::ostringstream p;
    p << "(define (problem " << name << "-instance)\n"
      << "  (:domain " << name << ")\n"
      << "  (:objects\n    ";
    for (int i = 0; i < inst.p; ++i) p << "plane" << i + 1 << ' ';
    p << "- plane\n    ";
    for (int i = 0; i < inst.t; ++i) p << "person" << i + 1 << ' ';
    p << "- person\n    ci cg ";
    for (int i = 0; i < inst.n; ++i) p << "c" << i + 1 << ' ';
    p << "- city)\n"
      << "  (:init\n";
    for (int i = 0; i < inst.p; ++i)
        p << "    (at-plane plane" << i + 1 << " ci) (empty plane" << i + 1 << ")\n";
    for (int i = 0; i < inst.t; ++i) p << "    (at-person person" << i + 1 << " ci)\n";
    for (int i = 0; i < inst.n; ++i) {
        p << "    (connected ci c" << i + 1 << ") (connected c" << i + 1 << " ci)\n";
        p << "    (connected c" << i + 1 << " cg) (connected cg c" << i + 1 << ")\n";
        p << "    (= (flight-duration ci c" << i + 1 << ") " << num(inst.d[i]) << ")\n";
        p << "    (= (flight-duration c" << i + 1 << " ci) " << num(inst.d[i]) << ")\n";
        p << "    (= (flight-duration c" << i + 1 << " cg) " << num(inst.dbar[i]) << ")\n";
        p << "    (= (flight-duration cg c" << i + 1 << ") " << num(inst.dbar[i]) << ")\n";
    }
    if (inst.central) {
        for (int i = 0; i < inst.n; ++i)
            for (int j = 0; j < inst.n; ++j) {
                if (i == j) continue;
                const double w = (*inst.central)[i][j];
                if (w >= kInfiniteDuration / 2) continue;
                p << "    (connected c" << i + 1 << " c" << j + 1 << ")\n";
                p << "    (= (flight-duration c" << i + 1 << " c" << j + 1 << ") " << num(w)
                  << ")\n";
            }
    }
    p << "    (= (landing-cost ci) 0)\n    (= (landing-cost cg) 0)\n";
    for (int i = 0; i < inst.n; ++i)
        p << "    (= (landing-cost c" << i + 1 << ") " << num(inst.c[i]) << ")\n";
    p << "    (= (boarding-time) 0)\n    (= (total-cost) 0))\n"
      << "  (:goal (and\n";
    for (int i = 0; i < inst.t; ++i) p << "    (at-person person" << i + 1 << " cg)\n";
    p << "  ))\n"
      << "  (:metric minimize (total-time))\n"
      << ")\n";

    return {d.str(), p.str()};
}

}  // namespace zenofront
