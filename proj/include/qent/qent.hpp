// Umbrella header.

#ifndef QENT_QENT_HPP
#define QENT_QENT_HPP

#include "qent/capacity.hpp"
#include "qent/channels.hpp"
#include "qent/core.hpp"
#include "qent/entropy.hpp"
#include "qent/lindblad.hpp"
#include "qent/matrices.hpp"
#include "qent/maxent.hpp"
#include "qent/random.hpp"
#include "qent/states.hpp"

#endif  // QENT_QENT_HPP
