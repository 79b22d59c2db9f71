#pragma once

#include "discordium/density.hpp"
#include "discordium/discord.hpp"
#include "discordium/eigh.hpp"
#include "discordium/errors.hpp"
#include "discordium/matrix.hpp"
#include "discordium/measurement.hpp"
#include "discordium/optimize.hpp"
#include "discordium/reldiscord.hpp"
#include "discordium/sampling.hpp"
#include "discordium/statefile.hpp"
#include "discordium/sun.hpp"
#include "discordium/xstate.hpp"
