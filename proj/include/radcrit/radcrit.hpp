#ifndef RADCRIT_RADCRIT_HPP
#define RADCRIT_RADCRIT_HPP

#include "radcrit/bsgs.hpp"
#include "radcrit/classes.hpp"
#include "radcrit/criteria.hpp"
#include "radcrit/error.hpp"
#include "radcrit/permutation.hpp"
#include "radcrit/report.hpp"
#include "radcrit/structure.hpp"
#include "radcrit/zoo.hpp"

#endif  // RADCRIT_RADCRIT_HPP
