#ifndef QUASIMODE_QUASIMODE_HPP
#define QUASIMODE_QUASIMODE_HPP

#include "quasimode/units.hpp"
#include "quasimode/dispersion.hpp"
#include "quasimode/optics.hpp"
#include "quasimode/kinematics.hpp"
#include "quasimode/spectrum.hpp"
#include "quasimode/plate_force.hpp"
#include "quasimode/fock_oracle.hpp"
#include "quasimode/table.hpp"
#include "quasimode/sweep.hpp"
#include "quasimode/figures.hpp"
#include "quasimode/verify_suite.hpp"

#endif // QUASIMODE_QUASIMODE_HPP
